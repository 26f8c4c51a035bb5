"""Run every verification suite over the default catalog and print a summary."""

from trivext.verifier import SEARCH_TARGETS, SUITES, CatalogSpec, reproduce_examples, run_suite, search_counterexamples

catalog = CatalogSpec()
r = reproduce_examples()
print(f"{'examples':<20} {r.instances:>7} checks   failures={len(r.failures)}")
for name in SUITES:
    r = run_suite(name, catalog)
    print(f"{name:<20} {r.instances:>7} instances failures={len(r.failures)}  {r.wall_time:.2f}s")
for target in SEARCH_TARGETS:
    r = search_counterexamples(target, catalog)
    print(f"search {target:<24} {r.notes[0]}")
