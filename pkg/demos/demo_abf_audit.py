"""Finitized character polynomials: identities that hold and one that does not.

The polynomials chi(r, b, a, N) interpolate minimal-model characters at
finite size N. Two exact identities (an inversion relation and a grouped
two-term relation) are checked to be identically zero. A published
prefactor variant is then audited: the derivation-backed form of the
relation closes, the printed one leaves a residual.
"""

from qkostka.abf import (
    AbfLabel,
    abf_polynomial,
    finitization_audit,
    grouped_identity_check,
    inversion_check,
)
from qkostka.virasoro import MinimalModel, conformal_weight, rocha_caridi

print("chi(3, b, a, N) for small N")
for b in (1, 2):
    for a in (1, 2, 3):
        row = [str(abf_polynomial(AbfLabel(3, b, a, N))) for N in range(abs(b - a) % 2, 7, 2)]
        print(f"  b={b} a={a}: " + " | ".join(row))

print()
print("inversion relation residuals (all must vanish)")
for r in (2, 3, 4):
    for N in (2, 5, 8):
        for b in range(1, r):
            for a in range(1, r + 1):
                if (N - (b - a)) % 2:
                    continue
                rec = inversion_check(AbfLabel(r, b, a, N))
                assert rec.residual.is_zero(), rec.params
print("  checked r <= 4, N <= 8: all zero")

print()
print("grouped relation residuals (all must vanish)")
for k in (1, 2):
    for j in range(k):
        for l in range(k + 1):
            for N in range((j + 1 - l) % 2, 7, 2):
                rec = grouped_identity_check(k, j, l, N)
                assert rec.residual.is_zero(), rec.params
print("  checked k <= 2, N <= 6: all zero")

# audit of the printed prefactor: the j = 0 family closes, the flagship
# case (k, j, l, N) = (2, 1, 0, 2) does not
print()
print("printed prefactor audit")
for rec in finitization_audit(2, 0, 1, 2):
    print(f"  j=0: {rec.route_a} vs {rec.route_b}: {rec.verdict}")
for rec in finitization_audit(2, 1, 0, 2):
    status = "residual " + str(rec.residual) if not rec.residual.is_zero() else "zero"
    print(f"  j=1: {rec.route_a} vs {rec.route_b}: {rec.verdict} ({status})")

# as N grows the low-order window of q^h * chi settles onto the character
print()
print("large-N window versus the (3,4) energy character")
mm = MinimalModel(3, 4, 2, 1)
target = rocha_caridi(mm, 6).coefficients()
for N in (4, 8, 16, 32):
    poly = abf_polynomial(AbfLabel(3, 2, 1, N + 1))
    window = [poly.coefficient(d) for d in range(7)]
    mark = "  <- settled" if window == target else ""
    print(f"  N={N + 1:>2}: {window}{mark}")
print(f"  char : {target}   (h = {conformal_weight(mm)})")
