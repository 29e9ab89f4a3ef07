"""Pure-Python fermionic kernels.

Every function works on a partition ``lam`` (tuple of positive ints,
weakly decreasing) and a charge ``h``.  Positions in Z+1/2 are passed
doubled (``m2 = 2*m``, always odd).  Internally beads are tracked by
their beta numbers ``lam[i] - (i+1)``, which equal ``m - h - 1/2``; the
vacuum tail of beads sits at beta = -(L+1), -(L+2), ...

The compiled module ``_ckernels`` exports the same functions with the
same semantics; ``focklab.kernels`` picks one at import time.
"""

BACKEND = "python"


def _strip(parts):
    n = len(parts)
    while n and parts[n - 1] == 0:
        n -= 1
    return tuple(parts[:n])


def black_positions2(lam, h, n):
    """First ``n`` black bead positions (doubled), strictly decreasing."""
    out = []
    L = len(lam)
    for i in range(1, n + 1):
        part = lam[i - 1] if i <= L else 0
        out.append(2 * (h - i + part) + 1)
    return out


def psi(lam, h, m2):
    """Wedge e_m onto |lam, h>.  Returns ``(sign, new_lam)`` or None.

    The result lives in charge h + 1.
    """
    b0 = (m2 - 1) // 2 - h
    L = len(lam)
    if b0 <= -(L + 1):
        return None
    count = 0
    for i in range(L):
        beta = lam[i] - i - 1
        if beta == b0:
            return None
        if beta < b0:
            break
        count += 1
    new = [p - 1 for p in lam[:count]]
    new.append(b0 + count)
    new.extend(lam[count:])
    return (-1 if count & 1 else 1), _strip(new)


def psi_star(lam, h, m2):
    """Contract e_m out of |lam, h>.  Returns ``(sign, new_lam)`` or None.

    The result lives in charge h - 1.
    """
    b0 = (m2 - 1) // 2 - h
    L = len(lam)
    if b0 <= -(L + 1):
        j = -b0
        new = [p + 1 for p in lam]
        new.extend([1] * (j - 1 - L))
        return (-1 if (j - 1) & 1 else 1), tuple(new)
    for i in range(L):
        beta = lam[i] - i - 1
        if beta == b0:
            new = [p + 1 for p in lam[:i]]
            new.extend(lam[i + 1:])
            return (-1 if i & 1 else 1), tuple(new)
        if beta < b0:
            return None
    return None


def psi_psi_star(lam, h, m2, n2):
    """psi_m psi*_n on |lam, h>; charge is preserved."""
    r = psi_star(lam, h, n2)
    if r is None:
        return None
    s1, mid = r
    r = psi(mid, h - 1, m2)
    if r is None:
        return None
    return s1 * r[0], r[1]


def bead_moves(lam, k):
    """All ways to move one black bead from p to p - k.

    Returns a list of ``(sign, new_lam)`` with sign (-1)^(beads jumped).
    The charge plays no role, so it is not an argument.
    """
    L = len(lam)
    out = []
    if k > 0:
        betas = [lam[i] - i - 1 for i in range(L)]
        present = set(betas)
        for i in range(L):
            t = betas[i] - k
            if t < -L or t in present:
                continue
            above = 0
            for b in betas:
                if b > t:
                    above += 1
            jumped = above - (i + 1)
            nb = betas[:i] + betas[i + 1:]
            nb.insert(above - 1, t)
            new = [nb[j] + j + 1 for j in range(L)]
            out.append(((-1 if jumped & 1 else 1), _strip(new)))
    elif k < 0:
        K = -k
        N = L + K
        betas = [(lam[i] if i < L else 0) - i - 1 for i in range(N)]
        present = set(betas)
        for i in range(N):
            t = betas[i] + K
            if t in present:
                continue
            above = 0
            for b in betas:
                if b > t:
                    above += 1
                else:
                    break
            jumped = i - above
            nb = betas[:i] + betas[i + 1:]
            nb.insert(above, t)
            new = [nb[j] + j + 1 for j in range(N)]
            out.append(((-1 if jumped & 1 else 1), _strip(new)))
    return out
