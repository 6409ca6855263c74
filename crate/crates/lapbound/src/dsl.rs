//! Family strings: `K:n`, `S:n`, `Kme:n`, `Kab:a:b`, `P:n`, `C:n`,
//! `TREE:n:seed`, `GNP:n:p:seed`, `CLIQUES:a,b,c`.
//!
//! Any single integer order field may be written as an inclusive range
//! `lo..hi` (e.g. `S:3..10`, `Kab:2:1..4`); [`parse_family_range`] expands it
//! to one spec per value.

use lapbound_core::FamilySpec;

use crate::error::ParseError;

#[derive(Debug, Clone, Copy)]
struct Field<'a> {
    text: &'a str,
    pos: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Complete,
    Star,
    CompleteMinusEdge,
    CompleteBipartite,
    Path,
    Cycle,
    Tree,
    Gnp,
    Cliques,
}

impl Kind {
    fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "K" => Self::Complete,
            "S" => Self::Star,
            "Kme" => Self::CompleteMinusEdge,
            "Kab" => Self::CompleteBipartite,
            "P" => Self::Path,
            "C" => Self::Cycle,
            "TREE" => Self::Tree,
            "GNP" => Self::Gnp,
            "CLIQUES" => Self::Cliques,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            Self::Complete | Self::Star | Self::CompleteMinusEdge | Self::Path | Self::Cycle => 1,
            Self::Cliques => 1,
            Self::CompleteBipartite | Self::Tree => 2,
            Self::Gnp => 3,
        }
    }

    /// Field positions that hold a vertex count and may be ranged.
    fn order_fields(self) -> &'static [usize] {
        match self {
            Self::CompleteBipartite => &[0, 1],
            Self::Cliques => &[],
            _ => &[0],
        }
    }
}

struct Parser<'a> {
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        ParseError::Family {
            input: self.input.to_string(),
            pos,
            msg: msg.into(),
        }
    }

    fn split(&self) -> Result<(Kind, Vec<Field<'a>>), ParseError> {
        let mut fields = Vec::new();
        let mut pos = 0;
        for part in self.input.split(':') {
            fields.push(Field { text: part, pos });
            pos += part.len() + 1;
        }
        let tag = fields.remove(0);
        let kind = Kind::from_tag(tag.text)
            .ok_or_else(|| self.err(0, format!("unknown family `{}`", tag.text)))?;
        if fields.len() != kind.arity() {
            let at = fields.get(kind.arity()).map_or(self.input.len(), |f| f.pos);
            return Err(self.err(
                at,
                format!(
                    "`{}` takes {} field(s), got {}",
                    tag.text,
                    kind.arity(),
                    fields.len()
                ),
            ));
        }
        Ok((kind, fields))
    }

    fn uint<T: std::str::FromStr>(&self, f: Field<'_>) -> Result<T, ParseError> {
        if f.text.is_empty() {
            return Err(self.err(f.pos, "empty field"));
        }
        f.text
            .parse()
            .map_err(|_| self.err(f.pos, format!("`{}` is not a non-negative integer", f.text)))
    }

    fn order(&self, f: Field<'_>) -> Result<usize, ParseError> {
        let n: usize = self.uint(f)?;
        if n == 0 {
            return Err(self.err(f.pos, "n >= 1 required"));
        }
        Ok(n)
    }

    fn range(&self, f: Field<'_>) -> Result<Option<(usize, usize)>, ParseError> {
        let Some((lo, hi)) = f.text.split_once("..") else {
            return Ok(None);
        };
        let lo_f = Field {
            text: lo,
            pos: f.pos,
        };
        let hi_f = Field {
            text: hi,
            pos: f.pos + lo.len() + 2,
        };
        let (a, b) = (self.order(lo_f)?, self.order(hi_f)?);
        if a > b {
            return Err(self.err(f.pos, format!("empty range {a}..{b}")));
        }
        Ok(Some((a, b)))
    }

    fn build(&self, kind: Kind, f: &[Field<'_>]) -> Result<FamilySpec, ParseError> {
        let spec = match kind {
            Kind::Complete => FamilySpec::Complete {
                n: self.order(f[0])?,
            },
            Kind::Star => FamilySpec::Star {
                n: self.order(f[0])?,
            },
            Kind::CompleteMinusEdge => FamilySpec::CompleteMinusEdge {
                n: self.order(f[0])?,
            },
            Kind::CompleteBipartite => FamilySpec::CompleteBipartite {
                a: self.order(f[0])?,
                b: self.order(f[1])?,
            },
            Kind::Path => FamilySpec::Path {
                n: self.order(f[0])?,
            },
            Kind::Cycle => FamilySpec::Cycle {
                n: self.order(f[0])?,
            },
            Kind::Tree => FamilySpec::RandomTree {
                n: self.order(f[0])?,
                seed: self.uint(f[1])?,
            },
            Kind::Gnp => {
                let p: f64 = f[1]
                    .text
                    .parse()
                    .map_err(|_| self.err(f[1].pos, format!("`{}` is not a number", f[1].text)))?;
                if !(p > 0.0 && p <= 1.0) {
                    return Err(self.err(f[1].pos, "p must lie in (0, 1]"));
                }
                FamilySpec::GnpConnected {
                    n: self.order(f[0])?,
                    p,
                    seed: self.uint(f[2])?,
                }
            }
            Kind::Cliques => {
                let mut sizes = Vec::new();
                let mut pos = f[0].pos;
                for part in f[0].text.split(',') {
                    sizes.push(self.order(Field { text: part, pos })?);
                    pos += part.len() + 1;
                }
                FamilySpec::CliqueUnion { sizes }
            }
        };
        // Family-specific minimums (cycles need 3 vertices, and so on).
        spec.validate()
            .map_err(|e| self.err(f[0].pos, e.to_string()))?;
        Ok(spec)
    }
}

/// Parses one family string; ranges are rejected.
pub fn parse_family_dsl(text: &str) -> Result<FamilySpec, ParseError> {
    let p = Parser { input: text };
    let (kind, fields) = p.split()?;
    p.build(kind, &fields)
}

/// Parses a family string that may carry one `lo..hi` range in an order
/// field, returning one spec per value in ascending order.
pub fn parse_family_range(text: &str) -> Result<Vec<FamilySpec>, ParseError> {
    let p = Parser { input: text };
    let (kind, fields) = p.split()?;
    let mut ranged = None;
    for (i, f) in fields.iter().enumerate() {
        if !f.text.contains("..") {
            continue;
        }
        if !kind.order_fields().contains(&i) {
            return Err(p.err(f.pos, "ranges are only allowed on vertex counts"));
        }
        if ranged.is_some() {
            return Err(p.err(f.pos, "at most one range per family"));
        }
        ranged = Some((i, p.range(*f)?.expect("contains `..`")));
    }
    let Some((i, (lo, hi))) = ranged else {
        return Ok(vec![p.build(kind, &fields)?]);
    };
    (lo..=hi)
        .map(|v| {
            let s = v.to_string();
            let mut fs = fields.clone();
            fs[i] = Field {
                text: &s,
                pos: fields[i].pos,
            };
            p.build(kind, &fs)
        })
        .collect()
}

/// Canonical family string; `parse_family_dsl(&to_dsl(s)) == s`.
pub fn to_dsl(spec: &FamilySpec) -> String {
    match spec {
        FamilySpec::Complete { n } => format!("K:{n}"),
        FamilySpec::Star { n } => format!("S:{n}"),
        FamilySpec::CompleteMinusEdge { n } => format!("Kme:{n}"),
        FamilySpec::CompleteBipartite { a, b } => format!("Kab:{a}:{b}"),
        FamilySpec::Path { n } => format!("P:{n}"),
        FamilySpec::Cycle { n } => format!("C:{n}"),
        FamilySpec::RandomTree { n, seed } => format!("TREE:{n}:{seed}"),
        FamilySpec::GnpConnected { n, p, seed } => format!("GNP:{n}:{p}:{seed}"),
        FamilySpec::CliqueUnion { sizes } => {
            let parts: Vec<String> = sizes.iter().map(usize::to_string).collect();
            format!("CLIQUES:{}", parts.join(","))
        }
    }
}
