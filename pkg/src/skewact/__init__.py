"""Skew monoidales as monads of oplax actions, checked in a finite matrix model."""
