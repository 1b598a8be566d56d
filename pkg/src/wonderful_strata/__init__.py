"""Combinatorics of the orbit and piece stratifications of wonderful group compactifications."""
