"""Management of hypersum."""
