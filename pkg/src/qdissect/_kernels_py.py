"""Pure-Python convolution kernel.

Same contract as the compiled module in ``_speedups.pyx``; used when the
extension is unavailable or explicitly disabled.
"""

BACKEND = "python"


def conv(a, b, out_len):
    """Truncated convolution of coefficient lists.

    out[n] = sum(a[i] * b[n-i]) for n < out_len.  Zero entries of the
    sparser operand are skipped, which makes multiplying by an almost-empty
    polynomial (a Pochhammer factor, say) cost O(nonzeros * len).
    """
    if out_len <= 0:
        return []
    out = [0] * out_len
    # iterate the operand with fewer nonzero entries on the outside
    na = sum(1 for x in a if x)
    nb = sum(1 for x in b if x)
    if nb < na:
        a, b = b, a
    lb = len(b)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        if i >= out_len:
            break
        hi = min(lb, out_len - i)
        for j in range(hi):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out
