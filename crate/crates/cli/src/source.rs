//! Resolving the positional graph argument: a file, `-` for stdin, or a
//! family spec such as `cycle:12` or `corona:tree:4:seed=7`.

use std::fs;
use std::io::Read;
use std::path::Path;

use fair_coalition::catalog::cubic_entry;
use fair_coalition::graph::{
    corona_k1, gen_complete, gen_complete_bipartite, gen_cycle, gen_empty, gen_path,
    gen_petersen, gen_random_graph, gen_random_tree,
};
use fair_coalition::io::{parse_edge_list, parse_graph6};
use fair_coalition::Graph;

pub const SPEC_HELP: &str = "path:N, cycle:N, complete:N, empty:N, bipartite:A:B, petersen, \
corona:tree:N[:seed=S], corona:path:N, cubic:ORDER:INDEX, random:N:P[:seed=S]";

/// Reads `arg` as a file (or stdin for `-`), falling back to a family spec
/// when no such file exists.
pub fn load_graph(arg: &str) -> Result<Graph, String> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading stdin: {e}"))?;
        return parse_graph_text(&text).map_err(|e| format!("stdin: {e}"));
    }
    if Path::new(arg).is_file() {
        let text = fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
        return parse_graph_text(&text).map_err(|e| format!("{arg}: {e}"));
    }
    parse_family(arg)
}

/// Reads a text argument that is a file path or `-`.
pub fn load_text(arg: &str) -> Result<String, String> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))
    }
}

/// Edge lists start with a digit (the order, possibly after comments);
/// graph6 never does, since its first byte is at least `?`.
pub fn parse_graph_text(text: &str) -> Result<Graph, String> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or("empty input")?;
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        parse_edge_list(text).map_err(|e| e.to_string())
    } else {
        parse_graph6(first).map_err(|e| e.to_string())
    }
}

fn number(field: &str, what: &str, spec: &str) -> Result<usize, String> {
    field
        .parse()
        .map_err(|_| format!("'{spec}': {what} must be a non-negative integer, got '{field}'"))
}

fn seed(field: Option<&str>, spec: &str) -> Result<u64, String> {
    match field {
        None => Ok(0),
        Some(f) => f
            .strip_prefix("seed=")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("'{spec}': expected seed=S, got '{f}'")),
    }
}

/// Builds a graph from a family spec.
pub fn parse_family(spec: &str) -> Result<Graph, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let graph = match parts.as_slice() {
        ["petersen"] => Ok(gen_petersen()),
        ["path", n] => gen_path(number(n, "N", spec)?),
        ["cycle", n] => gen_cycle(number(n, "N", spec)?),
        ["complete", n] => gen_complete(number(n, "N", spec)?),
        ["empty", n] => gen_empty(number(n, "N", spec)?),
        ["bipartite", a, b] => gen_complete_bipartite(number(a, "A", spec)?, number(b, "B", spec)?),
        ["corona", "path", n] => gen_path(number(n, "N", spec)?).and_then(|t| corona_k1(&t)),
        ["corona", "tree", n, rest @ ..] if rest.len() <= 1 => {
            let s = seed(rest.first().copied(), spec)?;
            gen_random_tree(number(n, "N", spec)?, s).and_then(|t| corona_k1(&t))
        }
        ["random", n, p, rest @ ..] if rest.len() <= 1 => {
            let p: f64 = p
                .parse()
                .ok()
                .filter(|p| (0.0..=1.0).contains(p))
                .ok_or_else(|| format!("'{spec}': P must be a probability, got '{p}'"))?;
            let s = seed(rest.first().copied(), spec)?;
            gen_random_graph(number(n, "N", spec)?, p, s)
        }
        ["cubic", order, index] => {
            let entry = cubic_entry(number(order, "ORDER", spec)?, number(index, "INDEX", spec)?)
                .map_err(|e| format!("'{spec}': {e}"))?;
            Ok(entry.graph().clone())
        }
        _ => {
            return Err(format!(
                "'{spec}' is neither a readable file nor a family spec ({SPEC_HELP})"
            ))
        }
    };
    graph.map_err(|e| format!("'{spec}': {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fair_coalition::is_isomorphic;

    #[test]
    fn family_specs() {
        assert_eq!(parse_family("path:5").unwrap(), gen_path(5).unwrap());
        assert_eq!(parse_family("cycle:12").unwrap().order(), 12);
        assert_eq!(parse_family("petersen").unwrap(), gen_petersen());
        assert_eq!(parse_family("empty:4").unwrap().size(), 0);
        assert_eq!(parse_family("bipartite:2:3").unwrap().size(), 6);
        let c = parse_family("corona:tree:4:seed=7").unwrap();
        assert_eq!(c.order(), 8);
        assert_eq!(c, parse_family("corona:tree:4:seed=7").unwrap());
        assert_eq!(parse_family("corona:tree:4").unwrap(), parse_family("corona:tree:4:seed=0").unwrap());
        assert!(is_isomorphic(&parse_family("cubic:10:19").unwrap(), &gen_petersen()));
        assert_eq!(parse_family("random:6:0.5:seed=3").unwrap().order(), 6);
    }

    #[test]
    fn bad_specs() {
        for bad in [
            "path",
            "path:x",
            "cycle:2",
            "corona:tree:4:salt=1",
            "cubic:12:1",
            "cubic:8:9",
            "random:5:1.5",
            "lattice:3",
            "path:65",
        ] {
            assert!(parse_family(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn detects_format() {
        let g6 = parse_graph_text("DhC\n").unwrap();
        let el = parse_graph_text("# P5\n5\n0 1\n1 2\n2 3\n3 4\n").unwrap();
        assert_eq!(g6, el);
        assert!(parse_graph_text("\n\n").is_err());
    }
}
