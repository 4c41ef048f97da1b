"""Exact cycle-density regions of regular graphs (build in progress)."""
