"""Performance benchmarks for optimization engine."""
