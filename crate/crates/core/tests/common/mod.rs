//! Shared corpora and helpers for the acceptance suite.

use friendly_split::circle::{Angle, Configuration};
use friendly_split::graph::{generate, Graph};
use friendly_split::Rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Numbers of connected labeled graphs on 1..=5 vertices.
pub const CONNECTED_COUNTS: [usize; 5] = [1, 1, 4, 38, 728];

/// Every connected labeled graph on `1..=nmax` vertices, by filtering all
/// edge subsets for connectivity.
pub fn connected_graphs_upto(nmax: usize) -> Vec<Graph> {
    assert!(nmax <= 6, "edge-subset enumeration blows up past n = 6");
    let mut out = Vec::new();
    for n in 1..=nmax {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1u64 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            if g.is_connected().unwrap() {
                out.push(g);
            }
        }
    }
    out
}

/// 500 seeded random connected G(n, p) graphs with 6 <= n <= 12.
pub fn random_corpus() -> Vec<Graph> {
    let ps = [0.25, 0.4, 0.6];
    (0..500)
        .map(|i| {
            let spec = friendly_split::graph::GeneratorSpec::Gnp {
                n: 6 + (i % 7),
                p: ps[i % 3],
                seed: 1000 + i as u64,
            };
            generate(&spec).unwrap()
        })
        .collect()
}

pub fn k23() -> Graph {
    Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
}

pub fn k33() -> Graph {
    Graph::from_edges(
        6,
        [
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

/// The 20 named fixture graphs used by the identity and rounding criteria.
pub fn fixture_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let named = [
        "complete:5",
        "complete:8",
        "cycle:5",
        "cycle:6",
        "cycle:9",
        "path:7",
        "friendship:3",
        "friendship:5",
        "petersen",
        "frucht",
        "thomassen32",
    ];
    for spec in named {
        let parsed: friendly_split::graph::GeneratorSpec = spec.parse().unwrap();
        out.push((spec.to_string(), generate(&parsed).unwrap()));
    }
    out.push(("k2_3".into(), k23()));
    out.push(("k3_3".into(), k33()));
    let randoms = [
        ("gnp:8:0.4", 2001u64),
        ("gnp:10:0.3", 2002),
        ("gnp:12:0.5", 2003),
        ("gnp:9:0.6", 2004),
        ("gnp:11:0.25", 2005),
        ("regular:12:3", 2006),
        ("regular:14:4", 2007),
    ];
    for (spec, seed) in randoms {
        let parsed: friendly_split::graph::GeneratorSpec = spec.parse().unwrap();
        out.push((
            format!("{spec}#{seed}"),
            generate(&parsed.with_seed(seed)).unwrap(),
        ));
    }
    assert_eq!(out.len(), 20);
    out
}

/// A seeded random rational configuration with denominators up to 60.
pub fn random_rational_config(n: usize, seed: u64) -> Configuration<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Configuration::new(
        (0..n)
            .map(|_| {
                let den = rng.gen_range(1..=60i64);
                let num = rng.gen_range(0..den);
                Angle::from_ratio(num, den)
            })
            .collect(),
    )
}

/// Wraps a criterion body so exactly one PASS/FAIL line is printed per
/// criterion, then propagates any failure to the harness.
pub fn criterion<F>(number: usize, name: &str, body: F)
where
    F: FnOnce() + std::panic::UnwindSafe,
{
    let result = std::panic::catch_unwind(body);
    match &result {
        Ok(()) => println!("acceptance {number:02} ({name}): PASS"),
        Err(_) => println!("acceptance {number:02} ({name}): FAIL"),
    }
    if let Err(payload) = result {
        std::panic::resume_unwind(payload);
    }
}
