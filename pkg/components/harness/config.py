"""
Key=value configuration files for the command line.

Keys are long flag names without their dashes. Values become the parser's
defaults, so a flag given on the command line still wins.
"""
import argparse
import logging

from typing import Dict

from components.exceptions import ParameterError

logger = logging.getLogger(__name__)

TRUE_WORDS = {"1", "true", "yes", "on"}
FALSE_WORDS = {"0", "false", "no", "off"}


def read_config(path: str) -> Dict[str, str]:
    values = {}
    with open(path, "r") as f:
        for number, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep or not key.strip():
                raise ParameterError(f"{path}, line {number}: expected key=value, got {line!r}")
            values[key.strip()] = value.strip()
    return values


def _convert(action: argparse.Action, key: str, value: str):
    if action.nargs == 0:
        word = value.lower()
        if word in TRUE_WORDS:
            return True
        if word in FALSE_WORDS:
            return False
        raise ParameterError(f"config key {key} expects true or false, got {value!r}")
    convert = action.type or str
    try:
        if action.nargs in ("+", "*"):
            return [convert(item) for item in value.split()]
        return convert(value)
    except (TypeError, ValueError) as e:
        raise ParameterError(f"config key {key}: {e}")


def apply_config(parser: argparse.ArgumentParser, values: Dict[str, str]) -> None:
    """Install config values as defaults of ``parser``; unknown keys are errors."""
    by_flag = {
        option[2:]: action
        for action in parser._actions
        for option in action.option_strings
        if option.startswith("--")
    }
    defaults = {}
    for key, value in values.items():
        action = by_flag.get(key)
        if action is None or key in ("config", "help"):
            raise ParameterError(f"config key {key!r} is not an option of this command")
        if action.choices is not None and _convert(action, key, value) not in action.choices:
            raise ParameterError(f"config key {key}: {value!r} is not one of {list(action.choices)}")
        defaults[action.dest] = _convert(action, key, value)
    parser.set_defaults(**defaults)
    logger.debug(f"Configuration defaults: {defaults}")
