"""Tokenization and token-to-symbol rewriting.

Two token lists are rewritten into sequences of integer symbols so that
tokens judged equivalent by a character-level metric share a symbol. Symbol
``k`` corresponds to the k+1-th symbol drawn from the pool (``alpha_{k+1}``
in the usual notation).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

TokenMetric = Callable[[str, str], float]

_DELIMITERS = re.compile(r"[\s\-'’/]+")


def tokenize(s: str) -> list[str]:
    """Split on whitespace, hyphens, apostrophes and slashes, then case-fold.

    >>> tokenize("Vaux-le-Vicomte")
    ['vaux', 'le', 'vicomte']
    """
    return [piece.lower() for piece in _DELIMITERS.split(s) if piece]


@dataclass
class SymbolTable:
    """Registered tokens and their symbols, in registration order."""

    entries: list[tuple[str, int]] = field(default_factory=list)
    size: int = 0

    def allocate(self) -> int:
        symbol = self.size
        self.size += 1
        return symbol

    def register(self, token: str, symbol: int) -> None:
        self.entries.append((token, symbol))


def assign_symbol(
    token: str, table: SymbolTable, mu1: TokenMetric, epsilon: float
) -> int:
    """Symbol for ``token`` given the tokens seen so far; registers it."""
    best_score = -1.0
    best_symbol = -1
    for rep, symbol in table.entries:
        score = mu1(token, rep)
        if score > best_score:
            best_score, best_symbol = score, symbol
    if best_symbol < 0 or best_score < epsilon:
        best_symbol = table.allocate()
    table.register(token, best_symbol)
    return best_symbol


def symbolize_pair(
    tokens1: Sequence[str],
    tokens2: Sequence[str],
    mu1: TokenMetric,
    epsilon: float,
) -> tuple[list[int], list[int]]:
    """Rewrite two token lists into symbol sequences.

    Tokens of the first list are processed before those of the second. Each
    token takes the symbol of the most similar token seen so far (earliest
    wins a tie) when that similarity reaches ``epsilon``, and a fresh symbol
    otherwise. Every token is registered after its symbol is decided, so
    later tokens can match any earlier one.
    """
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    table = SymbolTable()
    first = [assign_symbol(t, table, mu1, epsilon) for t in tokens1]
    second = [assign_symbol(t, table, mu1, epsilon) for t in tokens2]
    return first, second


def render(symbols: Sequence[int]) -> str:
    """Human readable form, e.g. ``[0, 1, 0]`` -> ``"α1α2α1"``."""
    return "".join(f"α{k + 1}" for k in symbols)
