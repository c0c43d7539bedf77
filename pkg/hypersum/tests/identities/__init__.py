"""Tests of hypersum.identities."""
