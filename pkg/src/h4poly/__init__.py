"""Exact W(H4) polytopes from quaternions."""
