"""Fixture replay harness comparing lattice outputs against fpylll."""

from .harness import ComparisonReport, replay_fixture, write_report

__version__ = "0.1.0"
