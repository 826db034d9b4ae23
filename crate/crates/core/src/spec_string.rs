//! Textual graph descriptors.
//!
//! ```text
//! spec := path:<m> | cycle:<n> | complete:<n> | biclique:<r>,<s>
//!       | corona(<spec>,<spec>) | file:<path>
//! ```
//!
//! Inside `corona(...)` a file path ends at the next `,` or `)`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::dimacs::{read_dimacs, DimacsError};
use crate::graph::{build_family, corona, CoronaLayout, FamilySpec, Graph, GraphError};

pub const GRAMMAR: &str = "\
spec := path:<m>                 path with m edges (m+1 vertices)
      | cycle:<n>                cycle of length n
      | complete:<n>             complete graph on n vertices
      | biclique:<r>,<s>         complete bipartite graph K_{r,s}
      | corona(<spec>,<spec>)    corona product, base first
      | file:<path>              DIMACS-like edge list";

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Dimacs { path: String, source: DimacsError },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecExpr {
    Family(FamilySpec),
    File(String),
    Corona(Box<SpecExpr>, Box<SpecExpr>),
}

/// A resolved spec: coronas keep their layout so the corona solver can use it.
#[derive(Debug, Clone)]
pub enum Instance {
    Plain(Graph),
    Corona(CoronaLayout),
}

impl Instance {
    pub fn graph(&self) -> &Graph {
        match self {
            Instance::Plain(g) => g,
            Instance::Corona(l) => &l.product,
        }
    }

    pub fn into_graph(self) -> Graph {
        match self {
            Instance::Plain(g) => g,
            Instance::Corona(l) => l.product,
        }
    }
}

impl SpecExpr {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut p = Parser { text, pos: 0 };
        let expr = p.spec(0)?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(expr)
    }

    pub fn family(&self) -> FamilySpec {
        match self {
            SpecExpr::Family(f) => f.clone(),
            SpecExpr::File(path) => FamilySpec::Custom(path.clone()),
            SpecExpr::Corona(a, b) => FamilySpec::corona(a.family(), b.family()),
        }
    }

    /// Builds the graph, reading any referenced files.
    pub fn resolve(&self) -> Result<Instance, SpecError> {
        match self {
            SpecExpr::Family(f) => Ok(Instance::Plain(build_family(f)?)),
            SpecExpr::File(path) => {
                let text = std::fs::read_to_string(PathBuf::from(path)).map_err(|source| {
                    SpecError::Io {
                        path: path.clone(),
                        source,
                    }
                })?;
                let g = read_dimacs(&text).map_err(|source| SpecError::Dimacs {
                    path: path.clone(),
                    source,
                })?;
                Ok(Instance::Plain(
                    g.with_tag(FamilySpec::Custom(path.clone())),
                ))
            }
            SpecExpr::Corona(a, b) => {
                let base = a.resolve()?.into_graph();
                let copy = b.resolve()?.into_graph();
                Ok(Instance::Corona(corona(&base, &copy)?))
            }
        }
    }
}

impl FromStr for SpecExpr {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SpecExpr::parse(s)
    }
}

impl fmt::Display for SpecExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecExpr::Family(spec) => write!(f, "{spec}"),
            SpecExpr::File(path) => write!(f, "file:{path}"),
            SpecExpr::Corona(a, b) => write!(f, "corona({a},{b})"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> SpecError {
        SpecError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), SpecError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize, SpecError> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a non-negative integer"));
        }
        let value = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("integer too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn spec(&mut self, depth: usize) -> Result<SpecExpr, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let family = if self.eat("path:") {
            FamilySpec::Path(self.number()?)
        } else if self.eat("cycle:") {
            FamilySpec::Cycle(self.number()?)
        } else if self.eat("complete:") {
            FamilySpec::Complete(self.number()?)
        } else if self.eat("biclique:") {
            let r = self.number()?;
            self.expect(",")?;
            FamilySpec::CompleteBipartite(r, self.number()?)
        } else if self.eat("corona(") {
            let a = self.spec(depth + 1)?;
            self.expect(",")?;
            let b = self.spec(depth + 1)?;
            self.expect(")")?;
            return Ok(SpecExpr::Corona(Box::new(a), Box::new(b)));
        } else if self.eat("file:") {
            let len = if depth == 0 {
                self.rest().len()
            } else {
                self.rest().find([',', ')']).unwrap_or(self.rest().len())
            };
            let path = self.rest()[..len].trim().to_string();
            if path.is_empty() {
                return Err(self.error("expected a file path"));
            }
            self.pos += len;
            return Ok(SpecExpr::File(path));
        } else {
            return Err(
                self.error("expected path:, cycle:, complete:, biclique:, corona( or file:")
            );
        };
        family.check().map_err(|e| SpecError::Parse {
            position: start,
            message: e.to_string(),
        })?;
        Ok(SpecExpr::Family(family))
    }
}
