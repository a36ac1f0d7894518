"""matchdim test suite."""
