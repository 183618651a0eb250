//! Interval configurations for `net-axioms`.
//!
//! ```text
//! interval arc(w:-2,w:-1,+)
//! interval arc(b:0,w:0,+)
//! include 0 1
//! ```

use comalg::intervals::{CircleInterval, NetConfig};

use crate::adl::Diagnostic;

pub fn parse(src: &str) -> Result<NetConfig, Diagnostic> {
    let mut intervals = Vec::new();
    let mut inclusions = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let words: Vec<(usize, &str)> =
            body.split_whitespace().map(|w| (w.as_ptr() as usize - body.as_ptr() as usize, w)).collect();
        let at = |k: usize| Diagnostic { line: ln + 1, col: body[..k].chars().count() + 1, message: String::new() };
        let fail = |k: usize, message: String| Diagnostic { message, ..at(k) };
        match words.as_slice() {
            [] => {}
            [(_, "interval"), (k, arc)] => {
                intervals.push(arc.parse::<CircleInterval>().map_err(|e| fail(*k, e.to_string()))?)
            }
            [(_, "include"), (ki, i), (kj, j)] => {
                let i =
                    i.parse::<usize>().map_err(|_| fail(*ki, format!("expected an interval index, found `{i}`")))?;
                let j =
                    j.parse::<usize>().map_err(|_| fail(*kj, format!("expected an interval index, found `{j}`")))?;
                inclusions.push((i, j));
            }
            [(k, w), ..] => {
                return Err(fail(*k, format!("expected `interval <arc>` or `include <i> <j>`, found `{w}`")))
            }
        }
    }
    let lines = src.lines().count().max(1);
    NetConfig::new(intervals, inclusions).map_err(|e| Diagnostic { line: lines, col: 1, message: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_intervals_and_inclusions() {
        let c =
            parse("# nested\ninterval arc(w:-3,w:-1,+)\ninterval arc(w:-2,w:-1,+)  # inner\ninclude 1 0\n").unwrap();
        assert_eq!(c.intervals.len(), 2);
        assert_eq!(c.inclusions, vec![(1, 0)]);
        assert_eq!(c.intervals[1].to_string(), "arc(w:-2,w:-1,+)");
    }

    #[test]
    fn errors_carry_positions() {
        let d = parse("interval arc(w:-3,w:-1,+)\n  include x 0\n").unwrap_err();
        assert_eq!((d.line, d.col), (2, 11));
        let d = parse("interval arc(top,top,+)").unwrap_err();
        assert_eq!((d.line, d.col), (1, 10));
        let d = parse("interval arc(w:-2,w:-1,+)\ninterval arc(w:-3,w:-1,+)\ninclude 1 0\n").unwrap_err();
        assert!(d.message.contains("not contained"));
    }
}
