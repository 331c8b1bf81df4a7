"""Graph algorithms, characterization and verification services."""
