"""Position code construction, validation and decoding.

The board's position code is built from two cyclic 3x167 binary arrays
("rings") in which every cyclic 3x3 window occurs at most once.  Ring A,
rotated 90 degrees, tiles the horizontal checkerboard edges; ring B tiles
the vertical edges.  The superposition is a 501x501 board on which every
3x3 block of pieces carries a globally unique 18-bit code.  Everything in
this module is pure integer/bit math on numpy arrays; no image data is
involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

RING_ROWS = 3
RING_COLS = 167
BOARD_SIZE = RING_ROWS * RING_COLS  # 501

#: Cell value marking an unreadable/occluded edge bit.
UNKNOWN = -1

#: Per-edge decode status codes (see DecodeResult.edge_status_*).
EDGE_UNREAD = -1
EDGE_INCORRECT = 0
EDGE_CORRECT = 1


class RingSearchError(RuntimeError):
    """Raised when the randomized ring search exhausts its step budget."""

    def __init__(self, message: str, best_pair=None):
        super().__init__(message)
        self.best_pair = best_pair


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


def _as_ring_array(bits) -> np.ndarray:
    arr = np.asarray(bits)
    if arr.shape != (RING_ROWS, RING_COLS):
        raise ValueError(
            f"ring must have shape {(RING_ROWS, RING_COLS)}, got {arr.shape}"
        )
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("ring must be binary")
    out = arr.astype(np.uint8)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class DeBruijnRing:
    """Cyclic 3x167 binary array whose 501 cyclic 3x3 windows are distinct.

    The distinctness property is what makes windows decodable; it is not
    enforced by the constructor (see :func:`validate_subperfect`) so that
    deliberately broken rings can be built in tests.
    """

    bits: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "bits", _as_ring_array(self.bits))

    def __eq__(self, other) -> bool:
        return isinstance(other, DeBruijnRing) and np.array_equal(self.bits, other.bits)

    def to_text(self) -> str:
        """Serialize as one '0'/'1' row per line."""
        return "\n".join("".join(str(int(b)) for b in row) for row in self.bits) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "DeBruijnRing":
        rows = [line.strip() for line in text.splitlines() if line.strip()]
        if len(rows) != RING_ROWS or any(len(r) != RING_COLS for r in rows):
            raise ValueError("ring text must contain 3 lines of 167 characters")
        if any(set(r) - {"0", "1"} for r in rows):
            raise ValueError("ring text may contain only '0' and '1'")
        return cls(np.array([[int(c) for c in row] for row in rows], dtype=np.uint8))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text(), encoding="ascii")

    @classmethod
    def load(cls, path: str | Path) -> "DeBruijnRing":
        return cls.from_text(Path(path).read_text(encoding="ascii"))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a sub-perfectness check."""

    ok: bool
    collisions: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    distinct_windows: int


def _ring_window_keys(bits: np.ndarray) -> np.ndarray:
    """9-bit values of all 501 cyclic 3x3 windows, indexed [row_offset, col]."""
    ext = np.pad(bits, ((0, 2), (0, 2)), mode="wrap")
    win = sliding_window_view(ext, (3, 3))[:RING_ROWS, :RING_COLS]
    flat = win.reshape(RING_ROWS, RING_COLS, 9).astype(np.uint16)
    weights = (1 << np.arange(9, dtype=np.uint16))
    return flat @ weights


def validate_subperfect(ring: DeBruijnRing | np.ndarray) -> ValidationReport:
    """Check that all 501 cyclic 3x3 windows of a ring are pairwise distinct."""
    bits = ring.bits if isinstance(ring, DeBruijnRing) else _as_ring_array(ring)
    keys = _ring_window_keys(bits)
    seen: dict[int, tuple[int, int]] = {}
    collisions = []
    for r in range(RING_ROWS):
        for c in range(RING_COLS):
            k = int(keys[r, c])
            if k in seen:
                collisions.append((seen[k], (r, c)))
            else:
                seen[k] = (r, c)
    return ValidationReport(
        ok=not collisions,
        collisions=tuple(collisions),
        distinct_windows=len(seen),
    )


def _rot_col(c: int) -> int:
    # cyclic downward row shift of a 3-bit column value
    return ((c << 1) | (c >> 2)) & 7


_COL_ROT = [ _rot_col(c) for c in range(8) ]


def _triple_keys(a: int, b: int, c: int) -> tuple[int, int, int]:
    """The three window values (one per row offset) of a column triple."""
    keys = []
    for _ in range(3):
        keys.append((a << 6) | (b << 3) | c)
        a, b, c = _COL_ROT[a], _COL_ROT[b], _COL_ROT[c]
    return tuple(keys)


def _search_ring_once(rng: np.random.Generator, max_steps: int) -> list[int] | None:
    """One bounded DFS over cyclic column sequences with a used-window set."""
    cols = [int(rng.integers(8)), int(rng.integers(8))]
    used: set[int] = set()
    steps = 0

    def claim(a: int, b: int, c: int):
        ks = _triple_keys(a, b, c)
        if len(set(ks)) != 3 or any(k in used for k in ks):
            return None
        used.update(ks)
        return ks

    def release(groups):
        for ks in groups:
            used.difference_update(ks)

    # frames: [remaining candidates, keys claimed at this depth]
    frames: list[list] = [[list(rng.permutation(8)), None]]
    while frames:
        steps += 1
        if steps > max_steps:
            return None
        cand, keys = frames[-1]
        if keys is not None:
            release(keys)
            cols.pop()
            frames[-1][1] = None
        if not cand:
            frames.pop()
            continue
        c = int(cand.pop())
        if len(cols) < RING_COLS - 1:
            ks = claim(cols[-2], cols[-1], c)
            if ks is None:
                continue
            cols.append(c)
            frames[-1][1] = (ks,)
            frames.append([list(rng.permutation(8)), None])
        else:
            # closing column: three wrap-around triples must all be fresh
            ks1 = claim(cols[-2], cols[-1], c)
            if ks1 is None:
                continue
            ks2 = claim(cols[-1], c, cols[0])
            if ks2 is None:
                release((ks1,))
                continue
            ks3 = claim(c, cols[0], cols[1])
            if ks3 is None:
                release((ks1, ks2))
                continue
            cols.append(c)
            return cols
    return None


def generate_ring(seed: int, *, attempts: int = 64, max_steps: int = 40_000) -> DeBruijnRing:
    """Generate a valid ring by seeded randomized backtracking.

    Deterministic for a fixed seed.  Raises :class:`RingSearchError` if all
    bounded attempts dead-end (retry with another seed).
    """
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        cols = _search_ring_once(rng, max_steps)
        if cols is not None:
            bits = np.zeros((RING_ROWS, RING_COLS), dtype=np.uint8)
            for i, c in enumerate(cols):
                for r in range(RING_ROWS):
                    bits[r, i] = (c >> r) & 1
            ring = DeBruijnRing(bits)
            report = validate_subperfect(ring)
            if not report.ok:  # pragma: no cover - search guarantees this
                raise RingSearchError("search produced an invalid ring")
            return ring
    raise RingSearchError(f"no ring found for seed {seed} within budget")


# ---------------------------------------------------------------------------
# Board composition
# ---------------------------------------------------------------------------


class BoardCode:
    """The composed 501x501 edge-bit code plus decode lookup tables.

    ``hbits[y, x]`` is the bit at the midpoint of the horizontal edge from
    corner (x, y) to (x+1, y); ``vbits[y, x]`` sits on the vertical edge from
    (x, y) to (x, y+1).  Ring A, rotated 90 degrees clockwise into a 167x3
    block, tiles the horizontal edges (periods 167 down, 3 across); ring B
    tiles the vertical edges natively (periods 3 down, 167 across).  The
    crossed periods are what make a window's horizontal bits pin (y mod 167,
    x mod 3) and its vertical bits (y mod 3, x mod 167), so both coordinates
    resolve over the full 501 range.  Instances are immutable and safe to
    share between concurrent decodes.
    """

    def __init__(self, ring_a: DeBruijnRing, ring_b: DeBruijnRing):
        for name, ring in (("ring_a", ring_a), ("ring_b", ring_b)):
            report = validate_subperfect(ring)
            if not report.ok:
                raise ValueError(f"{name} is not sub-perfect "
                                 f"({len(report.collisions)} window collisions)")
        self.ring_a = ring_a
        self.ring_b = ring_b
        #: horizontal-edge tile: ring A rotated clockwise, shape (167, 3)
        self.pattern_h = np.ascontiguousarray(np.rot90(ring_a.bits, -1))
        #: vertical-edge tile: ring B as stored, shape (3, 167)
        self.pattern_v = ring_b.bits
        self.pattern_h.setflags(write=False)

        ys, xs = np.ogrid[:BOARD_SIZE, :BOARD_SIZE]
        hbits = self.pattern_h[ys % RING_COLS, xs % RING_ROWS]
        vbits = self.pattern_v[ys % RING_ROWS, xs % RING_COLS]
        self.hbits = hbits.astype(np.uint8)
        self.vbits = vbits.astype(np.uint8)
        self.hbits.setflags(write=False)
        self.vbits.setflags(write=False)
        self._corr_h: np.ndarray | None = None
        self._corr_v: np.ndarray | None = None

    @classmethod
    def load_default(cls) -> "BoardCode":
        """Load the canonical ring pair shipped with the package."""
        a, b = load_default_rings()
        return cls(a, b)

    def _shift_table(self, pattern: np.ndarray) -> np.ndarray:
        """Matrix of all cyclic shifts; row dy*cols+dx holds the pattern
        seen by a window whose origin has phase (dy, dx)."""
        rows, cols = pattern.shape
        table = np.empty((rows * cols, rows * cols), dtype=np.int8)
        for dy in range(rows):
            for dx in range(cols):
                table[dy * cols + dx] = np.roll(pattern, (-dy, -dx), axis=(0, 1)).ravel()
        table.setflags(write=False)
        return table

    @property
    def corr_table_h(self) -> np.ndarray:
        if self._corr_h is None:
            self._corr_h = self._shift_table(self.pattern_h)
        return self._corr_h

    @property
    def corr_table_v(self) -> np.ndarray:
        if self._corr_v is None:
            self._corr_v = self._shift_table(self.pattern_v)
        return self._corr_v


def compose_board(ring_a: DeBruijnRing, ring_b: DeBruijnRing) -> BoardCode:
    """Compose two valid rings into the full board code."""
    return BoardCode(ring_a, ring_b)


# ---------------------------------------------------------------------------
# Observed code windows
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ObservedCode:
    """Edge bits read from a detected component, in its local lattice frame.

    For a window of W x H pieces the arrays cover every edge between its
    (W+1) x (H+1) corner lattice points: ``hbits`` has shape (H+1, W) and
    ``vbits`` shape (H, W+1), anchored so index [j, i] corresponds to the
    edge leaving corner (i, j) rightwards respectively downwards.  Cells
    hold 0, 1 or :data:`UNKNOWN`.
    """

    hbits: np.ndarray
    vbits: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.hbits, dtype=np.int8)
        v = np.asarray(self.vbits, dtype=np.int8)
        if h.ndim != 2 or v.ndim != 2:
            raise ValueError("observed bit arrays must be 2-D")
        if h.shape[0] != v.shape[0] + 1 or v.shape[1] != h.shape[1] + 1:
            raise ValueError(
                f"inconsistent window shapes {h.shape} / {v.shape}: "
                "expected (H+1, W) and (H, W+1)"
            )
        for arr in (h, v):
            if not np.isin(arr, (0, 1, UNKNOWN)).all():
                raise ValueError("observed bits must be 0, 1 or UNKNOWN")
        object.__setattr__(self, "hbits", h)
        object.__setattr__(self, "vbits", v)
        self.hbits.setflags(write=False)
        self.vbits.setflags(write=False)

    @property
    def extent(self) -> tuple[int, int]:
        """(W, H) piece extent of the window."""
        return self.hbits.shape[1], self.vbits.shape[0]

    @property
    def known_bits(self) -> int:
        return int((self.hbits != UNKNOWN).sum() + (self.vbits != UNKNOWN).sum())


def rotate_observed(obs: ObservedCode, quarter_turns: int) -> ObservedCode:
    """Rotate a window counter-clockwise by the given number of quarter turns.

    Rotation swaps the roles of horizontal and vertical edges; the arrays are
    re-anchored at the rotated window's own (0, 0) corner.
    """
    h, v = obs.hbits, obs.vbits
    for _ in range(quarter_turns % 4):
        h, v = np.rot90(v, -1), np.rot90(h, -1)
    return ObservedCode(np.ascontiguousarray(h), np.ascontiguousarray(v))


def map_corner(i: int, j: int, extent: tuple[int, int], quarter_turns: int) -> tuple[int, int]:
    """Map corner lattice coordinates through a counter-clockwise window rotation.

    ``extent`` is the (W, H) piece extent of the unrotated window; corners
    span 0..W x 0..H.  Matches :func:`rotate_observed`.
    """
    w, h = extent
    for _ in range(quarter_turns % 4):
        i, j = h - j, i
        w, h = h, w
    return i, j


def expected_bits(
    board: BoardCode,
    origin: tuple[int, int],
    orientation_deg: int,
    extent: tuple[int, int],
) -> ObservedCode:
    """Cyclic read-out of the board's edge bits as a window observation.

    Returns the observation a detector would produce for a window whose
    rotation by ``orientation_deg`` counter-clockwise aligns with the board
    with its (0, 0) corner at ``origin``.
    """
    if orientation_deg % 90 != 0:
        raise ValueError("orientation must be a multiple of 90 degrees")
    r = (orientation_deg // 90) % 4
    w, h = extent
    if w < 1 or h < 1:
        raise ValueError("extent must be at least 1x1 pieces")
    # read the aligned (rotated-frame) window, then rotate back
    if r % 2:
        w, h = h, w
    x0, y0 = int(origin[0]) % BOARD_SIZE, int(origin[1]) % BOARD_SIZE
    ys = (y0 + np.arange(h + 1)) % BOARD_SIZE
    xs = (x0 + np.arange(w + 1)) % BOARD_SIZE
    hw = board.hbits[np.ix_(ys, xs[:-1])].astype(np.int8)
    vw = board.vbits[np.ix_(ys[:-1], xs)].astype(np.int8)
    return rotate_observed(ObservedCode(hw, vw), (4 - r) % 4)


# ---------------------------------------------------------------------------
# Folding / majority vote
# ---------------------------------------------------------------------------


def _fold(arr: np.ndarray, period: tuple[int, int]) -> np.ndarray:
    """Majority-vote an observed array onto one tiling period.

    Ties and all-UNKNOWN cells fold to UNKNOWN; unknown observations never
    vote.
    """
    pr, pc = period
    jm = np.arange(arr.shape[0]) % pr
    im = np.arange(arr.shape[1]) % pc
    idx = (jm[:, None] * pc + im[None, :]).ravel()
    flat = arr.ravel()
    ones = np.bincount(idx[flat == 1], minlength=pr * pc)
    zeros = np.bincount(idx[flat == 0], minlength=pr * pc)
    folded = np.full(pr * pc, UNKNOWN, dtype=np.int8)
    folded[ones > zeros] = 1
    folded[zeros > ones] = 0
    return folded.reshape(pr, pc)


def fold_and_vote(obs: ObservedCode) -> tuple[np.ndarray, np.ndarray]:
    """Fold observed edge bits onto the code periods by majority voting.

    Returns the folded horizontal pattern (167x3) and vertical pattern
    (3x167), matching the board tiles; cells with tied or absent votes are
    UNKNOWN.
    """
    folded_h = _fold(obs.hbits, (RING_COLS, RING_ROWS))
    folded_v = _fold(obs.vbits, (RING_ROWS, RING_COLS))
    return folded_h, folded_v


# ---------------------------------------------------------------------------
# Decoding
# ---------------------------------------------------------------------------


class DecodeStatus(Enum):
    OK = "ok"
    AMBIGUOUS = "ambiguous"
    INSUFFICIENT_CODE = "insufficient_code"


@dataclass(frozen=True)
class DecodeResult:
    """Outcome of decoding one observed window against the board code.

    ``origin`` places the window's (0, 0) corner on the board after rotating
    the window by ``orientation_deg`` counter-clockwise; board coordinates of
    corner (i, j) follow via :func:`map_corner`.  ``edge_status_h/v`` mirror
    the observation arrays with per-edge EDGE_CORRECT / EDGE_INCORRECT /
    EDGE_UNREAD codes from re-projecting the decoded position's expected
    bits.
    """

    status: DecodeStatus
    origin: tuple[int, int] | None = None
    orientation_deg: int | None = None
    correlation_h: int = 0
    correlation_v: int = 0
    known_h: int = 0
    known_v: int = 0
    margin: float = 0.0
    edge_status_h: np.ndarray | None = None
    edge_status_v: np.ndarray | None = None

    @property
    def ok(self) -> bool:
        return self.status is DecodeStatus.OK


def _correlate(table: np.ndarray, folded: np.ndarray) -> np.ndarray:
    """Matched known bits for every cyclic shift (row index = dy*cols+dx)."""
    flat = folded.ravel()
    known = flat != UNKNOWN
    if not known.any():
        return np.zeros(table.shape[0], dtype=np.int32)
    return ((table[:, known] == flat[known])).sum(axis=1).astype(np.int32)


def _top2(scores: np.ndarray) -> tuple[int, int, int]:
    """(best index, best value, second-best value) of a score vector."""
    best = int(np.argmax(scores))
    if scores.size == 1:
        return best, int(scores[best]), 0
    second = int(np.partition(scores, -2)[-2])
    return best, int(scores[best]), second


def decode_position(
    obs: ObservedCode,
    board: BoardCode,
    *,
    ambiguity_margin: float = 0.03,
) -> DecodeResult:
    """Locate an observed window on the board (origin + orientation).

    For each of the four orientation hypotheses the rotated observation is
    folded by majority vote and cross-correlated (matched known bits) with
    the two tiling patterns over all cyclic shifts; the per-pattern phases
    combine to board coordinates by modulo arithmetic.  Scores are normalized
    by known-bit count before orientations are compared; a best-vs-runner-up
    normalized margin below ``ambiguity_margin`` yields AMBIGUOUS, and a
    window with no known bits in either pattern yields INSUFFICIENT_CODE.
    """
    table_h, table_v = board.corr_table_h, board.corr_table_v

    candidates = []
    runner_up = 0.0
    for r in range(4):
        rotated = rotate_observed(obs, r)
        folded_h, folded_v = fold_and_vote(rotated)
        kh = int((folded_h != UNKNOWN).sum())
        kv = int((folded_v != UNKNOWN).sum())
        if kh == 0 or kv == 0:
            continue
        corr_h = _correlate(table_h, folded_h)
        corr_v = _correlate(table_v, folded_v)
        sh, bh, second_h = _top2(corr_h)
        sv, bv, second_v = _top2(corr_v)
        norm = (bh + bv) / (kh + kv)
        # runner-up placement within this orientation: degrade one pattern
        within = max(second_h + bv, bh + second_v) / (kh + kv)
        candidates.append((norm, r, sh, sv, bh, bv, kh, kv, within))

    if not candidates:
        return DecodeResult(status=DecodeStatus.INSUFFICIENT_CODE)

    candidates.sort(key=lambda c: (-c[0], c[1]))
    norm, r, sh, sv, bh, bv, kh, kv, within = candidates[0]
    runner_up = max(
        [within] + [c[0] for c in candidates[1:]]
    )
    margin = norm - runner_up
    if margin < ambiguity_margin:
        return DecodeResult(
            status=DecodeStatus.AMBIGUOUS,
            correlation_h=bh, correlation_v=bv,
            known_h=kh, known_v=kv, margin=margin,
        )

    # horizontal pattern pins (y mod 167, x mod 3); vertical (y mod 3, x mod 167)
    y_h, x_h = divmod(sh, RING_ROWS)
    y_v, x_v = divmod(sv, RING_COLS)
    x = x_v + RING_COLS * ((x_v - x_h) % RING_ROWS)
    y = y_h + RING_COLS * ((y_h - y_v) % RING_ROWS)

    orientation = 90 * r
    expected = expected_bits(board, (x, y), orientation, obs.extent)
    status_h = _edge_status(obs.hbits, expected.hbits)
    status_v = _edge_status(obs.vbits, expected.vbits)

    return DecodeResult(
        status=DecodeStatus.OK,
        origin=(x, y),
        orientation_deg=orientation,
        correlation_h=bh,
        correlation_v=bv,
        known_h=kh,
        known_v=kv,
        margin=margin,
        edge_status_h=status_h,
        edge_status_v=status_v,
    )


def _edge_status(observed: np.ndarray, expected: np.ndarray) -> np.ndarray:
    status = np.full(observed.shape, EDGE_UNREAD, dtype=np.int8)
    read = observed != UNKNOWN
    status[read & (observed == expected)] = EDGE_CORRECT
    status[read & (observed != expected)] = EDGE_INCORRECT
    return status


# ---------------------------------------------------------------------------
# Orientation uniqueness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CollisionReport:
    """Uniqueness of windows under translation x 4 rotations."""

    window_pieces: int
    total_positions: int
    unique_positions: int
    colliding_positions: int

    @property
    def uniqueness_ratio(self) -> float:
        return self.unique_positions / self.total_positions


def _window_bit_stack(board: BoardCode, w: int) -> np.ndarray:
    """All (w+1)w + w(w+1) edge bits of every w x w piece window, (N, nbits)."""
    hp = np.pad(board.hbits, ((0, w), (0, w - 1)), mode="wrap")
    vp = np.pad(board.vbits, ((0, w - 1), (0, w)), mode="wrap")
    hwin = sliding_window_view(hp, (w + 1, w))[:BOARD_SIZE, :BOARD_SIZE]
    vwin = sliding_window_view(vp, (w, w + 1))[:BOARD_SIZE, :BOARD_SIZE]
    n = BOARD_SIZE * BOARD_SIZE
    return np.concatenate(
        [hwin.reshape(n, -1), vwin.reshape(n, -1)], axis=1
    ).astype(np.uint8)


def _rotation_perms(w: int) -> list[np.ndarray]:
    """Bit permutations realizing window rotation on the stacked bits."""
    nh = (w + 1) * w
    h_idx = np.arange(nh).reshape(w + 1, w)
    v_idx = nh + np.arange(nh).reshape(w, w + 1)
    perms = []
    for _ in range(4):
        perms.append(np.concatenate([h_idx.ravel(), v_idx.ravel()]))
        h_idx, v_idx = np.rot90(v_idx, -1), np.rot90(h_idx, -1)
    return perms


def _pack_keys(bits: np.ndarray, perm: np.ndarray) -> np.ndarray:
    keys = np.zeros(bits.shape[0], dtype=np.uint64)
    for k, src in enumerate(perm):
        keys |= bits[:, src].astype(np.uint64) << np.uint64(k)
    return keys


def orientation_collisions(board: BoardCode, window_pieces: int) -> CollisionReport:
    """Count window positions that are ambiguous under the 4 rotations.

    A position is unique iff the full edge-bit content of its window (24 bits
    for 3x3, 40 for 4x4) appears exactly once among all cyclic positions at
    all four orientations.
    """
    if window_pieces < 2:
        raise ValueError("window must span at least 2x2 pieces")
    bits = _window_bit_stack(board, window_pieces)
    perms = _rotation_perms(window_pieces)
    all_keys = np.concatenate([_pack_keys(bits, p) for p in perms])
    _, inverse, counts = np.unique(all_keys, return_inverse=True, return_counts=True)
    per_entry = counts[inverse]
    n = BOARD_SIZE * BOARD_SIZE
    unique = int((per_entry[:n] == 1).sum())
    return CollisionReport(
        window_pieces=window_pieces,
        total_positions=n,
        unique_positions=unique,
        colliding_positions=n - unique,
    )


def fixed_orientation_code_unique(board: BoardCode, window_pieces: int = 3) -> bool:
    """Check the per-piece (top+left bit) window codes are unique at known
    orientation over all cyclic positions."""
    w = window_pieces
    hp = np.pad(board.hbits, ((0, w - 1), (0, w - 1)), mode="wrap")
    vp = np.pad(board.vbits, ((0, w - 1), (0, w - 1)), mode="wrap")
    hwin = sliding_window_view(hp, (w, w))[:BOARD_SIZE, :BOARD_SIZE]
    vwin = sliding_window_view(vp, (w, w))[:BOARD_SIZE, :BOARD_SIZE]
    n = BOARD_SIZE * BOARD_SIZE
    bits = np.concatenate([hwin.reshape(n, -1), vwin.reshape(n, -1)], axis=1)
    keys = _pack_keys(bits.astype(np.uint8), np.arange(bits.shape[1]))
    return np.unique(keys).size == n


# ---------------------------------------------------------------------------
# Hamming / correlation profile
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HammingProfile:
    """Worst-case agreement of the code patterns at wrong placements.

    ``max_agreement_h[r]`` is the highest number of agreeing bits (out of
    501) between the horizontal folded pattern of the board rotated by
    ``90*r`` degrees and the canonical horizontal pattern over all cyclic
    shifts, excluding the correct alignment at r=0; ``max_agreement_v``
    likewise for the vertical pattern.  Distances are reported in
    correlation units (agreements minus disagreements below the perfect
    501), i.e. twice the Hamming bit distance.
    """

    max_agreement_h: tuple[int, int, int, int]
    max_agreement_v: tuple[int, int, int, int]
    pair_distances: tuple[int, int, int, int]
    min_pair_distance: int
    min_pair_bit_distance: int
    error_budget_bits: int


def hamming_profile(board: BoardCode) -> HammingProfile:
    """Exhaustively profile wrong-placement agreement for a board's rings."""
    table_h, table_v = board.corr_table_h, board.corr_table_v
    full = ObservedCode(
        board.hbits.astype(np.int8)[np.r_[0:BOARD_SIZE, 0]],
        np.column_stack([board.vbits, board.vbits[:, 0]]).astype(np.int8),
    )
    max_h, max_v, pair = [], [], []
    for r in range(4):
        folded_h, folded_v = fold_and_vote(rotate_observed(full, r))
        agree_h = _correlate(table_h, folded_h)
        agree_v = _correlate(table_v, folded_v)
        if r == 0:
            assert agree_h[0] == 501 and agree_v[0] == 501
            agree_h = agree_h[1:]
            agree_v = agree_v[1:]
        ah, av = int(agree_h.max()), int(agree_v.max())
        max_h.append(ah)
        max_v.append(av)
        # correlation-unit distance: 501 - (2*agree - 501) per pattern
        pair.append((2 * (501 - ah)) + (2 * (501 - av)))
    min_pair = min(pair)
    bit_distance = min_pair // 2
    return HammingProfile(
        max_agreement_h=tuple(max_h),
        max_agreement_v=tuple(max_v),
        pair_distances=tuple(pair),
        min_pair_distance=min_pair,
        min_pair_bit_distance=bit_distance,
        error_budget_bits=(bit_distance - 1) // 2,
    )


# ---------------------------------------------------------------------------
# Ring pair optimization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingPairQuality:
    collisions_3x3: int
    collisions_4x4: int
    uniqueness_3x3: float
    min_pair_distance: int


def evaluate_ring_pair(ring_a: DeBruijnRing, ring_b: DeBruijnRing) -> RingPairQuality:
    """Collision counts and correlation margins for a candidate pair."""
    board = compose_board(ring_a, ring_b)
    c3 = orientation_collisions(board, 3)
    c4 = orientation_collisions(board, 4)
    profile = hamming_profile(board)
    return RingPairQuality(
        collisions_3x3=c3.colliding_positions,
        collisions_4x4=c4.colliding_positions,
        uniqueness_3x3=c3.uniqueness_ratio,
        min_pair_distance=profile.min_pair_distance,
    )


def optimize_ring_pair(
    iterations: int,
    seed: int,
    *,
    min_pair_distance: int = 700,
) -> tuple[DeBruijnRing, DeBruijnRing, RingPairQuality]:
    """Stochastic hill-climbing over ring pairs.

    Each move regenerates one ring of the pair from a fresh sub-seed and is
    accepted when it improves (4x4 collisions, 3x3 collisions)
    lexicographically while keeping the correlation margin at least
    ``min_pair_distance``.  Returns the best pair encountered; raises
    :class:`RingSearchError` (with the best pair attached) if no
    4x4-collision-free pair was reached within the budget.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    rng = np.random.default_rng(seed)

    def fresh() -> DeBruijnRing:
        return generate_ring(int(rng.integers(2**63)))

    current = [fresh(), fresh()]
    quality = evaluate_ring_pair(*current)
    best = (list(current), quality)

    def rank(q: RingPairQuality) -> tuple:
        return (
            q.collisions_4x4,
            q.min_pair_distance < min_pair_distance,
            q.collisions_3x3,
        )

    for _ in range(iterations):
        side = int(rng.integers(2))
        candidate = list(current)
        candidate[side] = fresh()
        q = evaluate_ring_pair(*candidate)
        if rank(q) < rank(quality):
            current, quality = candidate, q
        if rank(quality) < rank(best[1]):
            best = (list(current), quality)

    pair, q = best
    if q.collisions_4x4 > 0 or q.min_pair_distance < min_pair_distance:
        raise RingSearchError(
            f"no acceptable pair within {iterations} iterations "
            f"(best: {q})",
            best_pair=(pair[0], pair[1]),
        )
    return pair[0], pair[1], q


# ---------------------------------------------------------------------------
# Packaged canonical rings
# ---------------------------------------------------------------------------


def load_default_rings() -> tuple[DeBruijnRing, DeBruijnRing]:
    """Load the canonical ring pair shipped as package data."""
    pkg = resources.files("puzzleboard.data")
    ring_a = DeBruijnRing.from_text((pkg / "ring_a.txt").read_text(encoding="ascii"))
    ring_b = DeBruijnRing.from_text((pkg / "ring_b.txt").read_text(encoding="ascii"))
    return ring_a, ring_b
