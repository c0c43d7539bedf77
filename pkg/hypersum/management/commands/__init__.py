"""Commands of hypersum."""
