use asmlat_core::{build_hasse, DEFAULT_GUARD};

#[test]
fn hasse_dot_n2() {
    let g = build_hasse(2, DEFAULT_GUARD).unwrap();
    assert_eq!(g.to_dot(true), include_str!("golden/hasse2.dot"));
}

#[test]
fn hasse_dot_n3() {
    let g = build_hasse(3, DEFAULT_GUARD).unwrap();
    assert_eq!(g.to_dot(true), include_str!("golden/hasse3.dot"));
}

#[test]
fn hasse_dot_is_deterministic() {
    let a = build_hasse(4, DEFAULT_GUARD).unwrap().to_dot(false);
    let b = build_hasse(4, DEFAULT_GUARD).unwrap().to_dot(false);
    assert_eq!(a, b);
    assert_eq!(
        a.matches(" -> ").count(),
        build_hasse(4, DEFAULT_GUARD).unwrap().edges.len()
    );
}
