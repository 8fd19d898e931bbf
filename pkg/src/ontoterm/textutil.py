"""Token-level text handling shared by naming, lexicon and docstore.

Comparison is case-folded and whitespace/punctuation-insensitive; no
stemming and no diacritic stripping ("à" stays distinct from "a").
"""

from __future__ import annotations

import re

_TOKEN_RE = re.compile(r"\w+", re.UNICODE)


def tokenize(text: str) -> tuple[str, ...]:
    """Case-folded word tokens, split on whitespace and punctuation."""
    return tuple(match.group(0).casefold() for match in _TOKEN_RE.finditer(text))
