use pyo3::prelude::*;
use pyo3::types::PyDict;

use p19free::p19free as p19free_module;

fn with_module(code: &str) {
    pyo3::append_to_inittab!(p19free_module);
    Python::initialize();
    Python::attach(|py| {
        let globals = PyDict::new(py);
        let script = std::ffi::CString::new(code).unwrap();
        py.run(&script, Some(&globals), None)
            .unwrap_or_else(|e| panic!("{e}"));
    });
}

#[test]
fn module_surface() {
    with_module(
        r#"
import p19free as p
g = p.mycielski(5)
assert (g.n, g.m, len(g)) == (23, 71, 23)
assert p.decide_coloring(g, 4).status == "not-colorable"
assert p.decide_coloring(g, 5, budget_nodes=1).status in ("colorable", "budget-exhausted")
r = p.has_induced_path(p.core_graph("G0,0"), 18)
assert r.decision == "found" and len(r.witness) == 18
assert p.has_induced_path(p.core_graph("G1"), 19).decision == "exhausted-no"
assert p.build_reduction(3, [(0, 1, 2)]).n == 41
assert p.nae_satisfiable(7, p.parse_mnae("mnae 7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n")[1]) is None
try:
    p.core_graph("G4")
    raise AssertionError("unknown graph accepted")
except ValueError:
    pass
try:
    p.Graph.from_text("graph 1 0\n")
    raise AssertionError("truncated file accepted")
except ValueError:
    pass
"#,
    );
}
