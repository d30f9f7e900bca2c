//! Round-trip and error-path coverage for the `.tg` instance format, plus
//! byte-stability of the JSON reports.

use tgg_cli::format::{parse_tg, serialize_tg};
use tgg_cli::report::game_report;
use tgg_core::{diffusion_play, generate, Family, StrategyProfile};

#[test]
fn random_graphs_round_trip() {
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize % 14);
        let tau = 1 + (seed as usize % 7);
        let g = generate(&Family::Random { n, tau, seed }).unwrap();
        let text = serialize_tg(&g);
        let back = parse_tg(&text).unwrap();
        assert_eq!(g, back, "seed {seed}");
        // a second trip reproduces the text byte for byte
        assert_eq!(text, serialize_tg(&back));
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "\
# a hand-written instance
tg 1

n 3 tau 2   # header
layer 1
1 2  # first edge
layer 2

2 3
";
    let g = parse_tg(text).unwrap();
    assert_eq!(g.n(), 3);
    assert_eq!(g.lifetime(), 2);
    assert_eq!(g.layer(1), &[(1, 2)]);
    assert_eq!(g.layer(2), &[(2, 3)]);
}

#[test]
fn edges_are_normalized_to_sorted_order() {
    let g = parse_tg("tg 1\nn 3 tau 1\nlayer 1\n3 1\n2 3\n").unwrap();
    assert_eq!(g.layer(1), &[(1, 3), (2, 3)]);
}

#[test]
fn malformed_inputs_are_rejected_with_context() {
    let cases = [
        ("", "empty"),
        ("tg 2\nn 2 tau 1\nlayer 1\n", "tg 1"),
        ("n 2 tau 1\nlayer 1\n", "tg"),
        ("tg 1\nn 2 tau 1\n1 2\nlayer 1\n", "layer"),
        ("tg 1\nn 2 tau 2\nlayer 2\nlayer 1\n", "layer"),
        ("tg 1\nn 2 tau 2\nlayer 1\n", "layer"),
        ("tg 1\nn 2 tau 1\nlayer 1\n1 3\n", "vertex"),
        ("tg 1\nn 2 tau 1\nlayer 1\n1 1\n", "loop"),
        ("tg 1\nn 3 tau 1\nlayer 1\n1 2\n2 1\n", "duplicate"),
        ("tg 1\nn 2 tau 1\nlayer 1\n1 2 3\n", "edge"),
        ("tg 1\nn x tau 1\nlayer 1\n", "n"),
    ];
    for (text, hint) in cases {
        let err = parse_tg(text).expect_err(hint).to_string().to_lowercase();
        assert!(err.contains(hint), "{hint}: got `{err}`");
    }
}

#[test]
fn json_reports_are_byte_stable_with_sorted_keys() {
    let g = generate(&Family::SequentialPath { n: 6 }).unwrap();
    let rep = diffusion_play(&g, &StrategyProfile::pair(2, 3), false).unwrap();
    let a = game_report(&g, &[2, 3], &rep).to_string();
    let b = game_report(&g, &[2, 3], &rep).to_string();
    assert_eq!(a, b);
    assert_eq!(
        a,
        r#"{"coloring":[1,1,2,2,2,2],"game":"diffusion","n":6,"payoffs":[2,4],"positions":[2,3],"tau":5}"#
    );
}
