"""Shared text normalization.

One tokenizer serves every lexical metric and the rule-based mock judge,
so score differences come from metric math rather than tokenization
drift. Tokenization lowercases, segments on Unicode word characters, and
drops punctuation (including underscores).
"""

from __future__ import annotations

import re

_TOKEN_RE = re.compile(r"[^\W_]+")


def normalize_ws(text: str) -> str:
    """Collapse runs of whitespace to single spaces and strip the ends."""
    return " ".join(text.split())


def tokenize(text: str) -> tuple[str, ...]:
    """Split ``text`` into lowercase word tokens, punctuation removed."""
    return tuple(_TOKEN_RE.findall(text.lower()))
