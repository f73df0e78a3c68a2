//! Command-line graph and host notation.
//!
//! Graphs: `K<n>`, `C<n>`, `P<n>`, `W<n>` (hub plus `C_n`), `fan:n,t`,
//! `petersen`, or a graph6 / sparse6 string. Hosts: `K<n>` or
//! `starbook:m,k`.

use ramseylab::arrowing::{BlueTarget, HostGraph};
use ramseylab::graph::{complete, cycle, fan, path, petersen, wheel, FanSpec};
use ramseylab::graph6::parse_any;
use ramseylab::{Error, Graph, Result};

fn bad(text: &str) -> Error {
    Error::Parse(format!("unrecognized graph {text:?}"))
}

fn number(text: &str, whole: &str) -> Result<usize> {
    text.parse().map_err(|_| bad(whole))
}

fn pair(text: &str, whole: &str) -> Result<(usize, usize)> {
    let (a, b) = text.split_once(',').ok_or_else(|| bad(whole))?;
    Ok((number(a.trim(), whole)?, number(b.trim(), whole)?))
}

fn fan_spec(text: &str) -> Option<&str> {
    text.strip_prefix("fan:")
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty graph".into()));
    }
    if let Some(rest) = fan_spec(text) {
        let (n, t) = pair(rest, text)?;
        return Ok(fan(FanSpec::new(n, t)?));
    }
    if text.eq_ignore_ascii_case("petersen") {
        return Ok(petersen());
    }
    let shorthand = |prefix: char| -> Option<Result<usize>> {
        let rest = text.strip_prefix(prefix)?;
        (!rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit())).then(|| number(rest, text))
    };
    if let Some(n) = shorthand('K') {
        return Ok(complete(n?));
    }
    if let Some(n) = shorthand('C') {
        return cycle(n?);
    }
    if let Some(n) = shorthand('P') {
        return Ok(path(n?));
    }
    if let Some(n) = shorthand('W') {
        return wheel(n?);
    }
    parse_any(text)
}

/// Blue targets keep fans on the dedicated detector.
pub fn parse_blue(text: &str) -> Result<BlueTarget> {
    match fan_spec(text.trim()) {
        Some(rest) => {
            let (n, t) = pair(rest, text)?;
            Ok(BlueTarget::Fan(FanSpec::new(n, t)?))
        }
        None => Ok(BlueTarget::from_graph(&parse_graph(text)?)),
    }
}

pub fn parse_host(text: &str) -> Result<HostGraph> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("starbook:") {
        let (m, k) = pair(rest, text)?;
        return HostGraph::star_book(m, k);
    }
    match text.strip_prefix('K') {
        Some(rest) => HostGraph::complete(number(rest, text)?),
        None => Err(Error::Parse(format!("unrecognized host {text:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthands() {
        assert_eq!(parse_graph("K4").unwrap().edge_count(), 6);
        assert_eq!(parse_graph("C5").unwrap().edge_count(), 5);
        assert_eq!(parse_graph("W5").unwrap().order(), 6);
        assert_eq!(parse_graph("fan:2,2").unwrap().edge_count(), 6);
        assert_eq!(parse_graph("Dhc").unwrap().edge_count(), 5);
        assert!(parse_graph("").is_err());
        assert!(parse_graph("C2").is_err());
        assert!(matches!(parse_blue("fan:3,2").unwrap(), BlueTarget::Fan(_)));
        assert!(matches!(parse_blue("K3").unwrap(), BlueTarget::Graph { .. }));
        assert_eq!(parse_host("starbook:5,2").unwrap(), HostGraph::StarBook { m: 5, k: 2 });
        assert!(parse_host("starbook:2,5").is_err());
    }
}
