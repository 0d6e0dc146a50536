"""Walk through the completed graded Grothendieck-Witt ring of Sp_2^r.

For r = 2 we send the Borel generators into truncated power series in y1, y2,
print the images, and then report the per-degree ranks against the dimension
of the S_2-invariant series.
"""

from gwweyl.completion import atiyah_segal_map, completion_map
from gwweyl.gw_ring import generator, sp_generator_set

r, D = 2, 5
gens = sp_generator_set(r, "borel")
asm = atiyah_segal_map(r, D)
for i, name in enumerate(g.name for g in gens):
    print(f"{name:>6} -> {asm(generator(gens, i))}")

lam = sp_generator_set(r, "lambda")
print(f"{lam[1].name:>6} -> {asm(generator(lam, 1))}")

print("\ndegree  image rank  invariant dim")
for rep in asm.report():
    print(f"{rep.degree:6d}  {rep.image_rank:10d}  {rep.invariant_dim:13d}")
print("completion map bijective:", completion_map(r, D).is_bijective())
