# file_utils.py
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Optional

import pandas as pd
import yaml


def _ensure_parent(file_path: str) -> None:
    Path(file_path).parent.mkdir(parents=True, exist_ok=True)


def read_json(file_path: str) -> Any:
    """
    Read a JSON file and return its contents.
    """
    with open(file_path, "r", encoding="utf-8") as f:
        return json.load(f)


def write_json(file_path: str, data: Any):
    """
    Write data to a JSON file with stable key order, creating parent folders.
    The file is replaced atomically so readers never see a partial write.
    """
    _ensure_parent(file_path)
    handle, temp_path = tempfile.mkstemp(dir=Path(file_path).parent, suffix=".tmp")
    try:
        with os.fdopen(handle, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, sort_keys=True)
            f.write("\n")
        os.replace(temp_path, file_path)
    except BaseException:
        Path(temp_path).unlink(missing_ok=True)
        raise


def read_csv(file_path: str) -> pd.DataFrame:
    """
    Read a CSV file into a pandas DataFrame.
    """
    return pd.read_csv(file_path)


def write_csv(file_path: str, rows: list, columns: Optional[list] = None):
    """
    Write a list of dictionaries to a CSV file through pandas.
    """
    _ensure_parent(file_path)
    pd.DataFrame(rows, columns=columns).to_csv(file_path, index=False)


def read_text(file_path: str) -> str:
    """
    Read a text file and return its contents as a string.
    """
    return Path(file_path).read_text(encoding="utf-8")


def write_text(file_path: str, content: str):
    """
    Write a string to a text file.
    """
    _ensure_parent(file_path)
    Path(file_path).write_text(content, encoding="utf-8")


def read_yaml(file_path: str) -> dict:
    """
    Read a YAML file and return its contents as a dictionary.
    """
    with open(file_path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)
