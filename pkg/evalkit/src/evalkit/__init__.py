"""Evaluation harness companion to the sigkit toolkit.

Converts the public bearing-vibration and EEG datasets into sigkit's
ingestion layouts, and scores sigkit feature tables with a seed-fixed
random-forest protocol.  Talks to sigkit only through its file formats
and CLI.
"""

__version__ = "0.1.0"
