"""Tree statistics and the rotation posets on trees with a fixed caret count."""

from __future__ import annotations

from .tree_pair import Tree, caret_info, left_spine, mirror, right_spine, size


class PosetDomainError(ValueError):
    pass


def spine_lefts(t: Tree) -> list[Tree]:
    """Left subtrees T_1..T_k of the right carets r_1..r_k."""
    out = []
    while t is not None:
        out.append(t[0])
        t = t[1]
    return out


def spine_rights(t: Tree) -> list[Tree]:
    """Right subtrees S_1..S_m of the left carets l_1 (root)..l_m."""
    out = []
    while t is not None:
        out.append(t[1])
        t = t[0]
    return out


def s_r(t: Tree) -> int:
    lefts = spine_lefts(t)
    for i in range(len(lefts), 0, -1):
        if lefts[i - 1] is not None:
            return i
    return 0


def s_l(t: Tree) -> int:
    return s_r(mirror(t))


def c_r(t: Tree) -> int:
    """Carets up to and including r_{s_r}."""
    return size(t) - (len(spine_lefts(t)) - s_r(t))


def c_l(t: Tree) -> int:
    """Carets from l_{s_l} onward."""
    return size(t) - (len(spine_rights(t)) - s_l(t))


def is_right_spine(t: Tree) -> bool:
    return s_r(t) == 0


def is_left_spine(t: Tree) -> bool:
    return s_l(t) == 0


def has_interior(t: Tree) -> bool:
    return any(kind == "interior" for kind, _ in caret_info(t))


def rotate_left(t: Tree) -> Tree:
    """(a (b c)) -> ((a b) c)."""
    if t is None or t[1] is None:
        raise PosetDomainError("left rotation needs a right child")
    a, (b, c) = t
    return ((a, b), c)


def rotate_right(t: Tree) -> Tree:
    """((a b) c) -> (a (b c))."""
    if t is None or t[0] is None:
        raise PosetDomainError("right rotation needs a left child")
    (a, b), c = t
    return (a, (b, c))


def one_rotation_apart(a: Tree, b: Tree) -> bool:
    """True iff b is obtained from a by exactly one rotation at some caret."""
    if a is None or b is None or a == b:
        return False
    if a[1] is not None and rotate_left(a) == b:
        return True
    if a[0] is not None and rotate_right(a) == b:
        return True
    if a[0] == b[0]:
        return one_rotation_apart(a[1], b[1])
    if a[1] == b[1]:
        return one_rotation_apart(a[0], b[0])
    return False


def right_step(d: Tree) -> Tree:
    """The successor f(D) in the right poset."""
    s = s_r(d)
    if s == 0:
        raise PosetDomainError("R_k is minimal and has no successor")
    if s % 2 == 1:
        return rotate_left(d) if d[0] is None else rotate_right(d)
    r2 = d[1]
    return (d[0], rotate_left(r2) if r2[0] is None else rotate_right(r2))


def left_step(a: Tree) -> Tree:
    """Mirror dual of :func:`right_step`; the chain ends at L_k."""
    if s_l(a) == 0:
        raise PosetDomainError("L_k is minimal and has no successor")
    return mirror(right_step(mirror(a)))


def right_chain(d: Tree) -> list[Tree]:
    """d, f(d), f(f(d)), ..., R_k."""
    chain = [d]
    while s_r(chain[-1]) > 0:
        chain.append(right_step(chain[-1]))
    return chain


def left_chain(a: Tree) -> list[Tree]:
    chain = [a]
    while s_l(chain[-1]) > 0:
        chain.append(left_step(chain[-1]))
    return chain


def _same_size(a: Tree, b: Tree) -> int:
    k = size(a)
    if size(b) != k:
        raise PosetDomainError("trees must have the same number of carets")
    return k


def less_r(d1: Tree, d2: Tree) -> bool:
    _same_size(d1, d2)
    return d1 in right_chain(d2)[1:]


def less_l(a1: Tree, a2: Tree) -> bool:
    _same_size(a1, a2)
    return a1 in left_chain(a2)[1:]


def make_b(j: int, k: int) -> Tree:
    """k carets, none interior, with the root at infix position j+1."""
    if not 0 <= j <= k - 1:
        raise PosetDomainError(f"B_j(k) needs 0 <= j <= k-1, got j={j}, k={k}")
    return (left_spine(j), right_spine(k - j - 1))


def less_l_j(j: int, a1: Tree, a2: Tree) -> bool:
    k = _same_size(a1, a2)
    if not 1 <= j <= k:
        raise PosetDomainError(f"index j={j} outside 1..{k}")
    if k <= 2 or j in (1, k - 1, k):
        return less_l(a1, a2)
    if a1 == a2:
        return False
    up = left_chain(a2)
    target = left_chain(make_b(j, k))
    target_pos = {t: i for i, t in enumerate(target)}
    for i, t in enumerate(up):
        if t in target_pos:
            path = up[: i + 1] + target[: target_pos[t]]
            return a1 in path
    raise AssertionError("left chains always meet at L_k")
