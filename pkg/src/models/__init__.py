"""Pydantic models for graphs, decompositions and reports."""
