"""Ring constructions, elements and subsets."""
