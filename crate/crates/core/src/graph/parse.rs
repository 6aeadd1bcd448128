use crate::error::{Error, Result};
use crate::graph::{Component, MaxDeg2Graph};

/// Parses a component expression such as `2C5+P3+3P1`.
///
/// Grammar: `term ('+' term)*` with `term = [multiplicity] ('C'|'P') length`.
/// Whitespace is ignored. Positions in errors are character offsets.
pub fn parse_spec(text: &str) -> Result<MaxDeg2Graph> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut components = Vec::new();
    let mut i = 0;
    loop {
        let mult = match read_number(&chars, &mut i)? {
            Some((_, 0)) => {
                return Err(Error::Syntax {
                    pos: chars[i - 1].0,
                    msg: "multiplicity must be at least 1".into(),
                })
            }
            Some((_, m)) => m,
            None => 1,
        };
        let (kind_pos, kind) = match chars.get(i) {
            Some(&(p, c)) => (p, c),
            None => {
                return Err(Error::Syntax {
                    pos: end_pos(text),
                    msg: "expected 'C' or 'P'".into(),
                })
            }
        };
        if kind != 'C' && kind != 'P' {
            return Err(Error::Syntax {
                pos: kind_pos,
                msg: format!("expected 'C' or 'P', found {kind:?}"),
            });
        }
        i += 1;
        let len = match read_number(&chars, &mut i)? {
            Some((_, len)) => len,
            None => {
                let pos = chars.get(i).map_or(end_pos(text), |c| c.0);
                return Err(Error::Syntax {
                    pos,
                    msg: "expected a length".into(),
                });
            }
        };
        let comp = if kind == 'C' {
            Component::cycle(len)?
        } else {
            Component::path(len)?
        };
        components.extend(std::iter::repeat(comp).take(mult));
        match chars.get(i) {
            None => break,
            Some(&(_, '+')) => i += 1,
            Some(&(p, c)) => {
                return Err(Error::Syntax {
                    pos: p,
                    msg: format!("expected '+', found {c:?}"),
                })
            }
        }
    }
    MaxDeg2Graph::new(components)
}

fn end_pos(text: &str) -> usize {
    text.chars().count()
}

fn read_number(chars: &[(usize, char)], i: &mut usize) -> Result<Option<(usize, usize)>> {
    let start = *i;
    let mut value: usize = 0;
    while let Some(&(pos, c)) = chars.get(*i) {
        let Some(d) = c.to_digit(10) else { break };
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(d as usize))
            .ok_or_else(|| Error::Syntax {
                pos,
                msg: "number too large".into(),
            })?;
        *i += 1;
    }
    if *i == start {
        Ok(None)
    } else {
        Ok(Some((chars[start].0, value)))
    }
}
