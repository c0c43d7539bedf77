"""Tests of hypersum commands."""
