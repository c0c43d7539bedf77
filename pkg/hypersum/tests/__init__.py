"""Tests of hypersum."""
