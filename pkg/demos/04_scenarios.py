"""
Building a scenario table from critical uncertainties
=====================================================

"""

from foresight import builtin_scenarios, custom_scenario, render_table

# Four named futures span the space of the critical uncertainties.
# Each carries a narrative cell per dimension plus two driver levels:
# A for technology adoption, R for regulatory support, both in [0, 1].
table = builtin_scenarios()
print("dimensions:")
for dim in table.dimensions:
    print(" -", dim)
print()

for sc in table.scenarios:
    print(f"{sc.name}: A={sc.drivers.A}, R={sc.drivers.R}")
    for dim, cell in sc.narratives.items():
        print(f"  {dim}: {cell}")
    print()

# The table renders to markdown (for reports) or CSV (for spreadsheets).
print(render_table(table, format="markdown"))

# Custom what-if scenarios slot in beside the built-ins.
wildcard = custom_scenario(
    "Wildcard",
    A=0.5,
    R=0.1,
    narratives={"AI & Digital Education": "Fragmented adoption across sectors"},
)
print()
print(f"{wildcard.name}: A={wildcard.drivers.A}, R={wildcard.drivers.R}")
