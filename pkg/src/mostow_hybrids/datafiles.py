"""Location and loading of the bundled data files.

Set MOSTOW_HYBRIDS_DATA to a directory to override the packaged copies
(same file names, same schemas).
"""

import json
import os
from importlib import resources
from pathlib import Path

ENV_VAR = "MOSTOW_HYBRIDS_DATA"


def data_dir():
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files(__package__) / "data"))


def load_json(name):
    path = data_dir() / name
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
