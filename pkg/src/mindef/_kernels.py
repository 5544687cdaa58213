"""Hot enumeration kernels with a JIT backend and a fallback backend.

Two independent enumeration strategies live here:

* ``subset_scan`` walks every bit pattern of a (small) search space in
  numeric order and keeps the conflict-free / admissible ones. This is the
  exhaustive reference path. JIT backend: a tight ``@njit`` loop over int64
  masks. Fallback backend: the same scan vectorized with numpy over an
  ``arange`` of all patterns.

* ``dfs_enumerate`` explores an include/exclude tree over the candidate
  arguments, pruning conflicting inclusions and branches whose pending
  defence obligations can no longer be met. JIT backend: an iterative
  ``@njit`` stack machine over int64 masks (candidate count <= 60).
  Fallback backend: a recursive pure-Python walk over unbounded ints, which
  also serves candidate counts beyond 60 and wall-clock deadlines (the JIT
  kernel cannot read the clock).

The backend is picked per call: the ``MINDEF_NUMBA`` environment variable
(``0``/``off`` disables JIT) sets the module default ``JIT_ENABLED``;
``benchmarks/compare_backends.py`` times one against the other.
"""

import os
import time

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        return wrap

JIT_ENABLED = HAVE_NUMBA and os.environ.get(
    "MINDEF_NUMBA", "1").strip().lower() not in ("0", "off", "no", "false")

# candidate counts above this use the pure-Python path (masks no longer fit
# a signed 64-bit word)
JIT_MAX_BITS = 60


class DeadlineReached(Exception):
    """Internal signal: the wall-clock ceiling fired mid-search."""


def backend_for(bit_count: int, deadline: float | None) -> str:
    if JIT_ENABLED and bit_count <= JIT_MAX_BITS and deadline is None:
        return "numba"
    return "fallback"


# ---------------------------------------------------------------------------
# exhaustive subset scan
# ---------------------------------------------------------------------------

@njit(cache=True)
def _scan_jit(k, att_local, ob_off, ob_masks, require_defence):
    out = np.empty(64, np.int64)
    count = 0
    for s in range(np.int64(1) << k):
        ok = True
        for i in range(k):
            if not (s >> i) & 1:
                continue
            if att_local[i] & s:
                ok = False
                break
            if require_defence:
                for t in range(ob_off[i], ob_off[i + 1]):
                    if ob_masks[t] & s == 0:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            if count == out.shape[0]:
                grown = np.empty(out.shape[0] * 2, np.int64)
                grown[:count] = out
                out = grown
            out[count] = s
            count += 1
    return out[:count]


def _scan_numpy(k, att_local, ob_off, ob_masks, require_defence):
    subs = np.arange(np.int64(1) << k, dtype=np.int64)
    ok = np.ones(subs.shape[0], dtype=np.bool_)
    for i in range(k):
        member = (subs >> i) & 1 == 1
        ok &= ~(member & ((subs & att_local[i]) != 0))
        if require_defence:
            for t in range(ob_off[i], ob_off[i + 1]):
                ok &= ~(member & ((subs & ob_masks[t]) == 0))
    return subs[ok]


def subset_scan(k: int, att_local, ob_off, ob_masks,
                require_defence: bool) -> list[int]:
    """All conflict-free (and, on request, admissible) k-bit patterns.

    ``att_local[i]`` is the mask of in-space attackers of member ``i``;
    ``ob_masks[ob_off[i]:ob_off[i+1]]`` holds, per attacker of member ``i``,
    the mask of in-space counter-attackers that would answer it. Patterns
    come back in increasing numeric order.
    """
    att = np.asarray(att_local, dtype=np.int64)
    off = np.asarray(ob_off, dtype=np.int64)
    obs = np.asarray(ob_masks, dtype=np.int64)
    if JIT_ENABLED and k <= JIT_MAX_BITS:
        res = _scan_jit(k, att, off, obs, require_defence)
    else:
        res = _scan_numpy(k, att, off, obs, require_defence)
    return [int(m) for m in res]


# ---------------------------------------------------------------------------
# include/exclude depth-first enumeration
# ---------------------------------------------------------------------------

@njit(cache=True)
def _dfs_jit(k, pos_idx, suffix_avail, forced_mask, conflict, ob_off, ob_masks,
             maximal_only):
    npos = pos_idx.shape[0]
    out = np.empty(64, np.int64)
    count = 0
    stack_depth = np.empty(npos + 2, np.int64)
    stack_inc = np.empty(npos + 2, np.int64)
    stack_depth[0] = 0
    stack_inc[0] = forced_mask
    top = 1
    while top > 0:
        top -= 1
        depth = stack_depth[top]
        inc = stack_inc[top]
        avail = suffix_avail[depth]
        dead = False
        for i in range(k):
            if not (inc >> i) & 1:
                continue
            for t in range(ob_off[i], ob_off[i + 1]):
                m = ob_masks[t]
                if m & inc == 0 and m & avail == 0:
                    dead = True
                    break
            if dead:
                break
        if dead:
            continue
        if depth == npos:
            if maximal_only:
                # drop leaves some excluded candidate could still join:
                # the enlarged set is admissible, so this one is not maximal
                extendable = False
                for i in range(k):
                    bit = np.int64(1) << i
                    if inc & bit or conflict[i] & inc:
                        continue
                    addable = True
                    for t in range(ob_off[i], ob_off[i + 1]):
                        if ob_masks[t] & (inc | bit) == 0:
                            addable = False
                            break
                    if addable:
                        extendable = True
                        break
                if extendable:
                    continue
            if count == out.shape[0]:
                grown = np.empty(out.shape[0] * 2, np.int64)
                grown[:count] = out
                out = grown
            out[count] = inc
            count += 1
            continue
        i = pos_idx[depth]
        bit = np.int64(1) << i
        can_include = conflict[i] & inc == 0
        must_include = False
        if can_include and maximal_only:
            # already defended and non-conflicting: any admissible superset
            # without i extends by i, so exclude-leaves are never maximal
            must_include = True
            for t in range(ob_off[i], ob_off[i + 1]):
                if ob_masks[t] & inc == 0:
                    must_include = False
                    break
            if not must_include and conflict[i] & suffix_avail[depth + 1] == 0:
                # no later branch can conflict with i either; if i stays
                # defendable by itself the exclude subtree is all non-maximal
                must_include = True
                for t in range(ob_off[i], ob_off[i + 1]):
                    if ob_masks[t] & (inc | bit) == 0:
                        must_include = False
                        break
        if not must_include:
            stack_depth[top] = depth + 1
            stack_inc[top] = inc
            top += 1
        if can_include:
            stack_depth[top] = depth + 1
            stack_inc[top] = inc | bit
            top += 1
    return out[:count]


def _dfs_py(k, pos_idx, suffix_avail, forced_mask, conflict, ob_off, ob_masks,
            maximal_only, deadline):
    npos = len(pos_idx)
    out = []
    ticks = 0

    def walk(depth, inc):
        nonlocal ticks
        ticks += 1
        if deadline is not None and ticks % 1024 == 0:
            if time.monotonic() > deadline:
                raise DeadlineReached
        avail = suffix_avail[depth]
        probe = inc
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            probe ^= low
            for t in range(ob_off[i], ob_off[i + 1]):
                m = ob_masks[t]
                if m & inc == 0 and m & avail == 0:
                    return
        if depth == npos:
            if maximal_only:
                # drop leaves some excluded candidate could still join:
                # the enlarged set is admissible, so this one is not maximal
                for i in range(k):
                    bit = 1 << i
                    if inc & bit or conflict[i] & inc:
                        continue
                    if all(ob_masks[t] & (inc | bit)
                           for t in range(ob_off[i], ob_off[i + 1])):
                        return
            out.append(inc)
            return
        i = pos_idx[depth]
        bit = 1 << i
        if conflict[i] & inc == 0:
            walk(depth + 1, inc | bit)
            if maximal_only:
                obligations = range(ob_off[i], ob_off[i + 1])
                # already defended and non-conflicting: any admissible
                # superset without i extends by i, so no exclude-leaf is
                # maximal; same if nothing ahead can ever conflict with i
                # and i stays defendable by itself
                if all(ob_masks[t] & inc for t in obligations):
                    return
                if (conflict[i] & suffix_avail[depth + 1] == 0
                        and all(ob_masks[t] & (inc | bit) for t in obligations)):
                    return
        walk(depth + 1, inc)

    walk(0, forced_mask)
    return out


def dfs_enumerate(k: int, pos_idx, suffix_avail, forced_mask: int, conflict,
                  ob_off, ob_masks, maximal_only: bool,
                  deadline: float | None) -> list[int]:
    """Admissible (or conflict-free, when no obligations) candidate masks.

    ``pos_idx`` lists the branchable candidate indices in fixed order;
    ``forced_mask`` members are included unconditionally. ``suffix_avail[d]``
    must hold the union of bits still branchable at depth ``d``. With
    ``maximal_only``, branches that provably yield no inclusion-maximal set
    are cut, so the caller must only use the result for maximality
    filtering. Raises :class:`DeadlineReached` when the deadline fires.
    """
    if backend_for(k, deadline) == "numba":
        res = _dfs_jit(k,
                       np.asarray(pos_idx, dtype=np.int64),
                       np.asarray(suffix_avail, dtype=np.int64),
                       np.int64(forced_mask),
                       np.asarray(conflict, dtype=np.int64),
                       np.asarray(ob_off, dtype=np.int64),
                       np.asarray(ob_masks, dtype=np.int64),
                       maximal_only)
        return [int(m) for m in res]
    return _dfs_py(k, list(pos_idx), list(suffix_avail), forced_mask,
                   list(conflict), list(ob_off), list(ob_masks), maximal_only,
                   deadline)


def warmup() -> None:
    """Force JIT compilation on a toy problem so later timings are honest."""
    if not JIT_ENABLED:
        return
    att = np.zeros(2, dtype=np.int64)
    att[1] = 1  # member 0 attacks member 1
    off = np.array([0, 0, 1], dtype=np.int64)
    obs = np.array([0], dtype=np.int64)
    _scan_jit(2, att, off, obs, True)
    _dfs_jit(2, np.array([0, 1], dtype=np.int64),
             np.array([3, 2, 0], dtype=np.int64), np.int64(0),
             np.array([0, 1], dtype=np.int64), off, obs, True)
