"""Metric dimension toolkit for small graphs."""
