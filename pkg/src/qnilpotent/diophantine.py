"""Signed three-block matrices and corank-preserving reduction moves.

``w([a,ea];[b,eb];[c,ec])`` is the ``N x N`` matrix (``N = a+b+c``)

    I_N + [[0,     0,     ec I_c],
           [0,     eb I_b, 0    ],
           [ea I_a, 0,     0    ]]

with block rows of sizes ``c, b, a`` and block columns of sizes ``a, b, c``.
With all signs ``+1`` it is ``1 + w`` for the permutation exchanging the
outer blocks, so its corank is the dimension of a center.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InputError
from .intmat import rank


@dataclass(frozen=True)
class BlockConfig:
    a: int
    ea: int
    b: int
    eb: int
    c: int
    ec: int

    def __post_init__(self):
        for size, sign in ((self.a, self.ea), (self.b, self.eb), (self.c, self.ec)):
            if size < 0:
                raise InputError("block sizes must be nonnegative")
            if sign not in (1, -1):
                raise InputError("signs must be +1 or -1")
        if self.a + self.b + self.c < 1:
            raise InputError("at least one block must be nonempty")
        # an empty block carries no sign
        for name, size in (("ea", self.a), ("eb", self.b), ("ec", self.c)):
            if size == 0:
                object.__setattr__(self, name, 1)

    @classmethod
    def plain(cls, a: int, b: int, c: int) -> "BlockConfig":
        return cls(a, 1, b, 1, c, 1)

    @property
    def size(self) -> int:
        return self.a + self.b + self.c

    @property
    def p(self) -> int:
        return self.a + self.b

    @property
    def q(self) -> int:
        return self.b + self.c

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.ea, self.b, self.eb, self.c, self.ec)

    def __str__(self) -> str:
        sg = lambda e: "+" if e > 0 else "-"
        return f"({self.a},{sg(self.ea)};{self.b},{sg(self.eb)};{self.c},{sg(self.ec)})"


def build_block_matrix(cfg: BlockConfig) -> list[list[int]]:
    a, b, c = cfg.a, cfg.b, cfg.c
    n = cfg.size
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(c):
        m[k][a + b + k] += cfg.ec
    for k in range(b):
        m[c + k][a + k] += cfg.eb
    for k in range(a):
        m[c + b + k][k] += cfg.ea
    return m


def corank_direct(cfg: BlockConfig) -> int:
    return cfg.size - rank(build_block_matrix(cfg))


MOVES = (1, 2, 3, 4)


def move_applies(cfg: BlockConfig, move: int) -> bool:
    """Each move must also shrink the matrix, which rules out degenerate cases."""
    a, b, c = cfg.a, cfg.b, cfg.c
    if move == 1:
        return a >= b + c and b + c > 0
    if move == 2:
        return c >= a + b and a + b > 0
    if move == 3:
        return b + c >= a > c
    if move == 4:
        return a + b >= c > a
    raise InputError(f"unknown move {move}")


def apply_move(cfg: BlockConfig, move: int) -> BlockConfig:
    if not move_applies(cfg, move):
        raise InputError(f"move {move} does not apply to {cfg}")
    a, ea, b, eb, c, ec = cfg.as_tuple()
    if move == 1:
        return BlockConfig(a - b - c, ea, b, -ea * eb, c, -ea * ec)
    if move == 2:
        return BlockConfig(a, -ec * ea, b, -ec * eb, c - a - b, ec)
    if move == 3:
        return BlockConfig(a, -eb * ea, b - (a - c), eb, c, -eb * ec)
    return BlockConfig(a, -eb * ea, b - (c - a), eb, c, -eb * ec)


def applicable_moves(cfg: BlockConfig) -> list[int]:
    return [m for m in MOVES if move_applies(cfg, m)]


@dataclass
class MoveStep:
    before: BlockConfig
    move: int
    after: BlockConfig

    def to_json(self) -> dict:
        return {"from": str(self.before), "move": self.move, "to": str(self.after)}


def greedy_trace(cfg: BlockConfig) -> list[MoveStep]:
    """Apply the lowest-numbered applicable move until none applies."""
    steps = []
    while True:
        moves = applicable_moves(cfg)
        if not moves:
            return steps
        nxt = apply_move(cfg, moves[0])
        steps.append(MoveStep(cfg, moves[0], nxt))
        cfg = nxt


@lru_cache(maxsize=None)
def terminal_configs(cfg: BlockConfig) -> frozenset[BlockConfig]:
    """Every configuration reachable by moves at which no move applies."""
    moves = applicable_moves(cfg)
    if not moves:
        return frozenset([cfg])
    out: set[BlockConfig] = set()
    for m in moves:
        out |= terminal_configs(apply_move(cfg, m))
    return frozenset(out)


@dataclass
class Exploration:
    start: BlockConfig
    corank: int
    terminals: dict[BlockConfig, int]

    @property
    def consistent(self) -> bool:
        return all(v == self.corank for v in self.terminals.values())


def explore(cfg: BlockConfig) -> Exploration:
    terms = {t: corank_direct(t) for t in terminal_configs(cfg)}
    return Exploration(cfg, corank_direct(cfg), terms)


def b1_corank(a: int, c: int) -> int:
    """Closed form for ``(a,+;1,+;c,+)``, ``a, c >= 1``."""
    if a < 1 or c < 1:
        raise InputError("a and c must be positive")
    p, q = a + 1, c + 1
    d = gcd(p, q)
    x, y = p // d, q // d
    return d - 1 if (x + y) % 2 == 0 else 1


def pqb(cfg: BlockConfig) -> tuple[int, int, int]:
    return cfg.p, cfg.q, cfg.b


def pq_lattice_gcd(cfg: BlockConfig) -> int:
    """The lattice ``pZ + qZ`` is ``gZ``; returns ``g``."""
    return gcd(cfg.p, cfg.q)


def b_class(cfg: BlockConfig) -> int:
    g = pq_lattice_gcd(cfg)
    return cfg.b % g if g else cfg.b


def pqb_image(cfg: BlockConfig, move: int) -> tuple[int, int, int]:
    """The effect of a move on ``(p, q, b)``, computed from the sizes alone."""
    p, q, b = pqb(cfg)
    if move == 1:
        return (p - q, q, b)
    if move == 2:
        return (p, q - p, b)
    if move == 3:
        return (q, 2 * q - p, b - (p - q))
    if move == 4:
        return (2 * p - q, p, b - (q - p))
    raise InputError(f"unknown move {move}")


def remark_config(a: int, b: int, c: int) -> tuple[BlockConfig, BlockConfig]:
    """``(a, b+a-c, c)`` with all signs ``+`` and its image under the first b-move."""
    if not a > c >= 0 or b < 0:
        raise InputError("need a > c >= 0 and b >= 0")
    start = BlockConfig.plain(a, b + a - c, c)
    return start, apply_move(start, 3)
