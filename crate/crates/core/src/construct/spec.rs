//! Group constructor expressions such as `S4`, `S3xC4`, `S3wrC2` or
//! `file:groups/g.txt`.
//!
//! Grammar: `expr := term ('x' term)*`, `term := atom ('wr' atom)*`,
//! `atom := S<n> | A<n> | C<n> | D<order> | WB<n> | SL2_3 | GL2_3 | '(' expr ')' | file:<path>`.
//! Both operators are left-associative and `wr` binds tighter. A `file:` path
//! extends to the end of the input or to an unmatched `)`.

use std::fmt;
use std::path::PathBuf;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    Sl2_3,
    Gl2_3,
    WeylB(usize),
    Wreath(Box<GroupSpec>, Box<GroupSpec>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    File(PathBuf),
}

impl GroupSpec {
    pub fn parse(input: &str) -> Result<GroupSpec> {
        let mut p = Parser {
            input,
            pos: 0,
            depth: 0,
        };
        let spec = p.expr()?;
        if p.pos != input.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(spec)
    }

    fn is_binary(&self) -> bool {
        matches!(self, GroupSpec::Wreath(..) | GroupSpec::Product(..))
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Sl2_3 => f.write_str("SL2_3"),
            GroupSpec::Gl2_3 => f.write_str("GL2_3"),
            GroupSpec::WeylB(n) => write!(f, "WB{n}"),
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
            GroupSpec::Product(a, b) => {
                // Left-associative: only a binary right operand needs parentheses.
                let left_paren = matches!(**a, GroupSpec::File(_));
                let right_paren = b.is_binary() || matches!(**b, GroupSpec::File(_));
                wrap(f, a, left_paren)?;
                f.write_str("x")?;
                wrap(f, b, right_paren)
            }
            GroupSpec::Wreath(a, b) => {
                let left_paren = matches!(**a, GroupSpec::Product(..) | GroupSpec::File(_));
                let right_paren = b.is_binary() || matches!(**b, GroupSpec::File(_));
                wrap(f, a, left_paren)?;
                f.write_str("wr")?;
                wrap(f, b, right_paren)
            }
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, s: &GroupSpec, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({s})")
    } else {
        write!(f, "{s}")
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        let column = self.input[..self.pos].chars().count();
        Error::SpecParse {
            input: self.input.to_string(),
            column: column + 1,
            caret: format!("{}^", " ".repeat(column)),
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.input[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<GroupSpec> {
        let mut lhs = self.term()?;
        while self.eat("x") {
            let rhs = self.term()?;
            lhs = GroupSpec::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<GroupSpec> {
        let mut lhs = self.atom()?;
        while self.eat("wr") {
            let rhs = self.atom()?;
            lhs = GroupSpec::Wreath(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn number(&mut self) -> Result<usize> {
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let n = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("number out of range"))?;
        self.pos += digits;
        Ok(n)
    }

    fn atom(&mut self) -> Result<GroupSpec> {
        if self.eat("(") {
            self.depth += 1;
            let inner = self.expr()?;
            if !self.eat(")") {
                return Err(self.error("expected ')'"));
            }
            self.depth -= 1;
            return Ok(inner);
        }
        if self.eat("file:") {
            let rest = self.rest();
            let len = if self.depth > 0 {
                rest.find(')').unwrap_or(rest.len())
            } else {
                rest.len()
            };
            if len == 0 {
                return Err(self.error("empty file path"));
            }
            let path = PathBuf::from(&rest[..len]);
            self.pos += len;
            return Ok(GroupSpec::File(path));
        }
        if self.eat("SL2_3") {
            return Ok(GroupSpec::Sl2_3);
        }
        if self.eat("GL2_3") {
            return Ok(GroupSpec::Gl2_3);
        }
        if self.eat("WB") {
            return Ok(GroupSpec::WeylB(self.positive()?));
        }
        let start = self.pos;
        let ctor: fn(usize) -> GroupSpec = if self.eat("S") {
            GroupSpec::Symmetric
        } else if self.eat("A") {
            GroupSpec::Alternating
        } else if self.eat("C") {
            GroupSpec::Cyclic
        } else if self.eat("D") {
            GroupSpec::Dihedral
        } else {
            return Err(self.error("unknown token"));
        };
        let n = self.positive()?;
        if matches!(ctor(0), GroupSpec::Dihedral(_)) && n % 2 != 0 {
            self.pos = start;
            return Err(self.error("dihedral order must be even"));
        }
        Ok(ctor(n))
    }

    fn positive(&mut self) -> Result<usize> {
        let at = self.pos;
        let n = self.number()?;
        if n == 0 {
            self.pos = at;
            return Err(self.error("expected a positive number"));
        }
        Ok(n)
    }
}
