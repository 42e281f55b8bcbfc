use crate::partition::Partition;
use crate::tuple::SkewTuple;
use crate::ShapeError;

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Int(u32),
    List(Vec<Node>),
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self) -> ShapeError {
        ShapeError::Parse(self.src.to_string())
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn node(&mut self) -> Result<Node, ShapeError> {
        self.skip_ws();
        match self.s.get(self.i) {
            Some(b'(') | Some(b'[') => {
                let close = if self.s[self.i] == b'(' { b')' } else { b']' };
                self.i += 1;
                let mut items = Vec::new();
                self.skip_ws();
                if self.s.get(self.i) == Some(&close) {
                    self.i += 1;
                    return Ok(Node::List(items));
                }
                loop {
                    items.push(self.node()?);
                    self.skip_ws();
                    match self.s.get(self.i) {
                        Some(b',') => self.i += 1,
                        Some(c) if *c == close => {
                            self.i += 1;
                            return Ok(Node::List(items));
                        }
                        _ => return Err(self.err()),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let t = std::str::from_utf8(&self.s[start..self.i]).map_err(|_| self.err())?;
                Ok(Node::Int(t.parse().map_err(|_| self.err())?))
            }
            _ => Err(self.err()),
        }
    }
}

fn parse_node(s: &str) -> Result<Node, ShapeError> {
    let mut p = Parser { s: s.as_bytes(), i: 0, src: s };
    let n = p.node()?;
    p.skip_ws();
    if p.i != p.s.len() {
        return Err(p.err());
    }
    Ok(n)
}

fn as_partition(n: &Node, src: &str) -> Result<Partition, ShapeError> {
    match n {
        Node::List(items) => {
            let parts = items
                .iter()
                .map(|x| match x {
                    Node::Int(v) => Ok(*v),
                    _ => Err(ShapeError::Parse(src.to_string())),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Partition::new(parts)
        }
        Node::Int(_) => Err(ShapeError::Parse(src.to_string())),
    }
}

/// `(4,3,2,2,1)`; `()` is the partition with no parts.
pub fn parse_partition(s: &str) -> Result<Partition, ShapeError> {
    as_partition(&parse_node(s)?, s)
}

/// `((1),(2))`. Square brackets are accepted as well, so JSON arrays parse.
pub fn parse_tuple(s: &str) -> Result<Vec<Partition>, ShapeError> {
    match parse_node(s)? {
        Node::List(items) => items.iter().map(|n| as_partition(n, s)).collect(),
        Node::Int(_) => Err(ShapeError::Parse(s.to_string())),
    }
}

/// `lam` or `lam / mu` for tuples; missing parts are padded with zeros.
pub fn parse_skew_tuple(s: &str) -> Result<SkewTuple, ShapeError> {
    match s.split_once('/') {
        None => {
            let lam = parse_tuple(s)?;
            SkewTuple::padded(lam.clone(), lam.iter().map(|_| Partition::zeros(0)).collect())
        }
        Some((a, b)) => SkewTuple::padded(parse_tuple(a)?, parse_tuple(b)?),
    }
}

/// `lam` or `lam / mu` for single partitions, padded to equal length.
pub fn parse_skew_partition(s: &str) -> Result<(Partition, Partition), ShapeError> {
    let (lam, mu) = match s.split_once('/') {
        None => (parse_partition(s)?, Partition::zeros(0)),
        Some((a, b)) => (parse_partition(a)?, parse_partition(b)?),
    };
    let p = lam.len().max(mu.len());
    let (lam, mu) = (lam.with_len(p)?, mu.with_len(p)?);
    if !lam.contains(&mu) {
        return Err(ShapeError::NotContained);
    }
    Ok((lam, mu))
}
