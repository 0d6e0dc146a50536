"""Print the duality sign of every fundamental weight of Sp_2n for n <= 4.

Also compares each sign with the plethysm test: a self-dual irreducible is
symplectic exactly when the trivial representation sits in its exterior square.
"""

from gwweyl.gw_ring import duality_data, sign_by_plethysm, sign_of_weight
from gwweyl.root_system import CartanType, build_root_system, fundamental_weight

for n in range(1, 5):
    rs = build_root_system(CartanType.C(n))
    dd = duality_data(rs, "SpIdentity")
    row = []
    for i in range(1, n + 1):
        w = fundamental_weight(rs, i)
        s = sign_of_weight(rs, dd, w)
        assert s == sign_by_plethysm(rs, w)
        row.append(f"w{i}:{s:+d}")
    print(f"C{n}  " + "  ".join(row))
