"""Walkthrough: the three entropy measures on hand-picked elements.

Run from the repository root:

    python demos/01_entropy_measures.py
"""

from phfe import (
    F1,
    F2,
    F3,
    FuzzinessKernel,
    R1,
    all_configs,
    canonicalize,
    complement,
    comprehensive_entropy,
    fuzziness_entropy,
    nonspecificity_entropy,
    su_entropy_p1,
    su_entropy_p2,
)


def show(title):
    print()
    print(title)
    print("-" * len(title))


# An element is a set of membership degrees with occurrence
# probabilities.  Three two-valued elements that differ only in how the
# probability mass is placed:
h1 = canonicalize([(0.7, 0.2), (0.9, 0.8)])
h2 = canonicalize([(0.6, 0.9), (0.9, 0.1)])
h3 = canonicalize([(0.6, 0.1), (0.9, 0.9)])

show("Fuzziness: departure from a crisp 0/1 judgement")
for name, h in [("h1", h1), ("h2", h2), ("h3", h3)]:
    print(
        f"{name} = {h!r:24s} fuzziness {fuzziness_entropy(h, R1):.4f}"
        f"   shannon-baseline {su_entropy_p1(h):.4f}"
        f"   exp-baseline {su_entropy_p2(h):.4f}"
    )
print("the fuzziness measure orders h2 > h3 > h1, separating h1 and h3,")
print("which swap only their probabilities; both baselines order h2 > h1 > h3.")

show("The exponent widens or sharpens the r1 kernel")
for r in (1.0, 2.0, 5.0):
    kernel = FuzzinessKernel("r1", r)
    print(f"r = {r:3.0f}: " + "  ".join(f"{fuzziness_entropy(h, kernel):.4f}" for h in (h1, h2, h3)))

show("Non-specificity: spread among the membership degrees")
narrow = canonicalize([(0.4, 0.5), (0.6, 0.5)])
wide = canonicalize([(0.2, 0.5), (0.8, 0.5)])
for kernel, label in [(F1, "f1"), (F2, "f2"), (F3, "f3")]:
    print(
        f"{label}: narrow {nonspecificity_entropy(narrow, kernel):.4f}"
        f"   wide {nonspecificity_entropy(wide, kernel):.4f}"
    )
print("every kernel rates the wider element as less specific, while the")
print("expectation-based baseline gives 1.0 for both and cannot tell them apart.")

show("Distinguished elements")
for label, h in [
    ("crisp {0|1}", canonicalize([(0.0, 1.0)])),
    ("crisp {1|1}", canonicalize([(1.0, 1.0)])),
    ("maximal fuzziness {0.5|1}", canonicalize([(0.5, 1.0)])),
    ("maximal non-specificity {0|.5, 1|.5}", canonicalize([(0.0, 0.5), (1.0, 0.5)])),
]:
    print(
        f"{label:38s} fuzziness {fuzziness_entropy(h):.4f}"
        f"   non-specificity {nonspecificity_entropy(h):.4f}"
    )

show("Comprehensive entropy: combining both facets")
a = canonicalize([(0.3, 0.25), (0.45, 0.5), (0.7, 0.25)])
for config in all_configs()[:6]:
    print(f"{config.label:12s} {comprehensive_entropy(a, config):.4f}")
print("the max combiner is always the smallest, the bounded sum the largest.")

show("Complement symmetry")
c = complement(a)
print(f"a            = {a!r}")
print(f"complement   = {c!r}")
print(f"fuzziness    : {fuzziness_entropy(a):.12f} vs {fuzziness_entropy(c):.12f}")
print(f"non-spec (f2): {nonspecificity_entropy(a, F2):.12f} vs {nonspecificity_entropy(c, F2):.12f}")
