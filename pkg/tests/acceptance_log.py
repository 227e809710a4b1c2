"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

LINES = []


def record(line):
    LINES.append(line)
    print(line)
