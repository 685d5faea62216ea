"""Bistochastic quantum channels, their Markov-chain limits and coined quantum walks."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import check_report as _check_report
from ._core import classification_report as _classification_report


def classification(channel):
    """Classification report as a dict, including claim conflicts."""
    return _json.loads(_classification_report(channel))


def check(channels):
    """Full diagnostic report for a list of channels, as a dict."""
    return _json.loads(_check_report(list(channels)))
