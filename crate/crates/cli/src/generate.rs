//! Generator specs such as `cycle:9`, `foldedcube:7` or
//! `cayleyf2:3:1,2,4,7`.

use oddgirth::graph::{self, Graph};

use crate::{HarnessError, HarnessResult};

pub const SPEC_HELP: &str = "cycle:<k>, complete:<n>, path:<n>, star:<leaves>, \
completebipartite:<a>:<b>, hypercube:<d>, foldedcube:<d>, cayleyf2:<m>:<hex,hex,...>";

fn usage(spec: &str, why: impl std::fmt::Display) -> HarnessError {
    HarnessError::Usage(format!(
        "bad generator spec {spec:?}: {why} (expected one of {SPEC_HELP})"
    ))
}

fn number<T: std::str::FromStr>(spec: &str, field: &str) -> HarnessResult<T> {
    field
        .trim()
        .parse()
        .map_err(|_| usage(spec, format!("{field:?} is not a non-negative integer")))
}

fn hex_word(spec: &str, field: &str) -> HarnessResult<u64> {
    let digits = field.trim();
    let digits = digits
        .strip_prefix("0x")
        .or_else(|| digits.strip_prefix("0X"))
        .unwrap_or(digits);
    u64::from_str_radix(digits, 16)
        .map_err(|_| usage(spec, format!("{field:?} is not hexadecimal")))
}

/// True if `text` looks like a generator spec rather than a file path.
pub fn looks_like_spec(text: &str) -> bool {
    let family = text.split(':').next().unwrap_or("");
    text.contains(':')
        && matches!(
            family,
            "cycle"
                | "complete"
                | "path"
                | "star"
                | "completebipartite"
                | "hypercube"
                | "foldedcube"
                | "cayleyf2"
        )
}

/// Builds the graph described by `spec`. Any malformed or out-of-range
/// spec is a usage error.
pub fn generate(spec: &str) -> HarnessResult<Graph> {
    let parts: Vec<&str> = spec.trim().split(':').collect();
    let arity = |want: usize| {
        if parts.len() == want {
            Ok(())
        } else {
            Err(usage(
                spec,
                format!("expected {} field(s) after the family name", want - 1),
            ))
        }
    };
    let built = match parts[0] {
        "cycle" => {
            arity(2)?;
            graph::cycle(number(spec, parts[1])?)
        }
        "complete" => {
            arity(2)?;
            graph::complete(number(spec, parts[1])?)
        }
        "path" => {
            arity(2)?;
            graph::path(number(spec, parts[1])?)
        }
        "star" => {
            arity(2)?;
            graph::star(number(spec, parts[1])?)
        }
        "completebipartite" => {
            arity(3)?;
            graph::complete_bipartite(number(spec, parts[1])?, number(spec, parts[2])?)
        }
        "hypercube" => {
            arity(2)?;
            graph::hypercube(number(spec, parts[1])?)
        }
        "foldedcube" => {
            arity(2)?;
            graph::folded_cube(number(spec, parts[1])?)
        }
        "cayleyf2" => {
            arity(3)?;
            let m: u32 = number(spec, parts[1])?;
            let gens = parts[2]
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| hex_word(spec, s))
                .collect::<HarnessResult<Vec<u64>>>()?;
            graph::cayley_f2(m, &gens)
        }
        other => return Err(usage(spec, format!("unknown family {other:?}"))),
    };
    built.map_err(|e| usage(spec, e))
}
