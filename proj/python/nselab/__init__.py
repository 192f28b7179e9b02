"""Spectral verification lab for explicit periodic Navier-Stokes solutions."""

import json as _json

from ._nselab import *  # noqa: F401,F403
from ._nselab import _run_experiment_json


def run_experiment(experiment, **options):
    """Run a named experiment (verify, nonuniq, blowup, taylor, dns-compare,
    gauge) and return the report as a dict. Keyword names use underscores in
    place of dashes; list values become comma-separated."""
    entries = {}
    for key, value in options.items():
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, (list, tuple)):
            text = ",".join(str(v) for v in value)
        else:
            text = str(value)
        entries[key.replace("_", "-")] = text
    return _json.loads(_run_experiment_json(experiment, entries))
