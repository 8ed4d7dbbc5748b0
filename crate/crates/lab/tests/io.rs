use isolation_core::Graph;
use isolation_lab::io::{parse_dimacs, parse_edge_list, read_graph, write_dimacs, write_edge_list, write_graph, GraphFormat};
use isolation_lab::LabError;
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (0usize..12).prop_flat_map(|n| {
        prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..30).prop_map(move |pairs| {
            Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v && n > 0)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in graph_strategy()) {
        prop_assert_eq!(parse_edge_list("t", &write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn dimacs_round_trip(g in graph_strategy()) {
        prop_assert_eq!(parse_dimacs("t", &write_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn parser_never_panics(text in ".{0,80}") {
        let _ = parse_edge_list("t", &text);
        let _ = parse_dimacs("t", &text);
    }
}

#[test]
fn files_pick_the_format_from_the_extension() {
    let dir = tempfile::tempdir().unwrap();
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    for name in ["g.el", "g.dimacs", "g.col"] {
        let path = dir.path().join(name);
        write_graph(&path, &g, None).unwrap();
        assert_eq!(read_graph(&path, None).unwrap(), g);
    }
    let text = std::fs::read_to_string(dir.path().join("g.dimacs")).unwrap();
    assert_eq!(text, "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    let forced = dir.path().join("g.txt");
    write_graph(&forced, &g, Some(GraphFormat::Dimacs)).unwrap();
    assert_eq!(read_graph(&forced, Some(GraphFormat::Dimacs)).unwrap(), g);
    assert!(read_graph(&forced, None).is_err());
}

#[test]
fn missing_files_are_io_errors() {
    let err = read_graph(std::path::Path::new("/nonexistent/g.el"), None).unwrap_err();
    assert!(matches!(err, LabError::Io { .. }));
    assert_eq!(err.exit_code(), isolation_lab::exit::IO);
}
