use ribbon::RibbonGraph;

const BUBBLE: &str = "\
# two 4-valent vertices joined by a double line
v: a1+ a2- a3+ a4-
v: b1+ b2- b3+ b4-
e: a1 b2
e: a2 b1
";

const PLANAR_TADPOLE: &str = "\
v: h1+ h2- h3+ h4-
e: h1 h2
";

const NONPLANAR_TADPOLE: &str = "\
v: h1+ h2- h3+ h4-
e: h1 h3
";

#[test]
fn bubble_topology_and_degrees() {
    let g = RibbonGraph::parse(BUBBLE).unwrap();
    assert_eq!(g.n_vertices(), 2);
    assert_eq!(g.internal_lines(), 2);
    assert_eq!(g.external_legs(), 4);
    let t = g.topology().unwrap();
    assert_eq!((t.faces, t.broken, t.genus), (2, 1, 0));
    assert_eq!(g.degrees(4).unwrap(), (0, 0));
}

#[test]
fn planar_tadpole() {
    let g = RibbonGraph::parse(PLANAR_TADPOLE).unwrap();
    let t = g.topology().unwrap();
    assert_eq!((t.faces, t.broken, t.genus), (2, 1, 0));
    assert_eq!(g.degrees(4).unwrap(), (2, 2));
}

#[test]
fn nonplanar_tadpole_has_two_broken_faces() {
    let g = RibbonGraph::parse(NONPLANAR_TADPOLE).unwrap();
    let t = g.topology().unwrap();
    assert_eq!((t.faces, t.broken, t.genus), (2, 2, 0));
    // d_nc = d_c − D(2g + B − 1) = 2 − 4·1 = −2
    assert_eq!(g.degrees(4).unwrap(), (2, -2));
}

#[test]
fn genus_one_vacuum_graph() {
    // one vertex with both pairings crossed: F = 1, χ = 0, g = 1
    let g = RibbonGraph::parse("v: h1+ h2- h3+ h4-\ne: h1 h3\ne: h2 h4\n").unwrap();
    let t = g.topology().unwrap();
    assert_eq!((t.faces, t.broken, t.genus), (1, 0, 1));
}

#[test]
fn planar_regular_six_point_is_convergent() {
    // two vertices, one internal line, N = 6: d_c = 4 + 0 − 2·3 = −2,
    // planar with one broken face so d_nc = d_c
    let g = RibbonGraph::parse("v: a1+ a2- a3+ a4-\nv: b1+ b2- b3+ b4-\ne: a1 b2\n").unwrap();
    let t = g.topology().unwrap();
    assert_eq!((t.genus, t.broken), (0, 1));
    assert_eq!(g.degrees(4).unwrap(), (-2, -2));
}

#[test]
fn orientability_witnesses() {
    // planar regular bubble: orientable as given
    let g = RibbonGraph::parse(BUBBLE).unwrap();
    assert!(g.orientable().is_some());
    // all-parallel double-bubble: needs a vertex flip, genus 1, orientable
    let g = RibbonGraph::parse(
        "v: a1+ a2- a3+ a4-\nv: b1+ b2- b3+ b4-\ne: a1 b1\ne: a2 b2\ne: a3 b3\ne: a4 b4\n",
    )
    .unwrap();
    let t = g.topology().unwrap();
    assert_eq!(t.genus, 1);
    let flips = g.orientable().expect("orientable with one vertex flipped");
    assert_ne!(flips[0], flips[1]);
    // a line joining two same-sign corners of one vertex can never be
    // oriented: flipping the vertex flips both corners together
    let g = RibbonGraph::parse("v: h1+ h2- h3+ h4+\ne: h3 h4\n").unwrap();
    assert!(g.orientable().is_none());
}

#[test]
fn input_validation() {
    assert!(RibbonGraph::parse("").is_err());
    assert!(RibbonGraph::parse("v: h1+ h2\n").is_err()); // missing sign
    assert!(RibbonGraph::parse("v: h1+ h1-\n").is_err()); // duplicate id
    assert!(RibbonGraph::parse("v: h1+ h2-\ne: h1 h1\n").is_err()); // self-pair
    assert!(RibbonGraph::parse("v: h1+ h2- h3+\ne: h1 h2\ne: h2 h3\n").is_err()); // re-pair
    assert!(RibbonGraph::parse("x: h1+\n").is_err());
    // disconnected: two vertices, no line between them
    let g = RibbonGraph::parse("v: a1+ a2-\nv: b1+ b2-\ne: a1 a2\n").unwrap();
    assert!(g.topology().is_err());
    // power counting rejects non-4-valent vertices
    let g = RibbonGraph::parse("v: a1+ a2-\ne: a1 a2\n").unwrap();
    assert!(g.degrees(4).is_err());
}
