//! The `.adl` definition format.
//!
//! ```text
//! algebra Z2 { dim 2 unit 1,0 mul 0 0 -> 1,0 mul 0 1 -> 0,1 mul 1 0 -> 0,1 mul 1 1 -> 1,0 }
//! morphism u : K -> Z2 { row 1 row 0 }
//! bimodule H : Z2 - Z2 { regular }
//! net A : Z2
//! defect D : A - A { algebra Z2 phi { row 1,0,0,1 row 0,1,1,0 } }
//! sector S : D - D { bimodule H }
//! ```
//!
//! Tokens are whitespace separated, braces stand alone and `#` starts a
//! comment. Vectors are comma-separated rationals without spaces.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use comalg::ccn::{identity_defect, Defect, Net, Sector};
use comalg::linalg::sparse;
use comalg::{Algebra, AlgebraMorphism, Bimodule, Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

type Parsed<T> = Result<T, Diagnostic>;

#[derive(Clone, Debug)]
struct Token {
    text: String,
    line: usize,
    col: usize,
}

impl Token {
    fn error(&self, message: impl Into<String>) -> Diagnostic {
        Diagnostic { line: self.line, col: self.col, message: message.into() }
    }
}

fn tokenize(src: &str) -> Vec<Token> {
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let mut word: Option<Token> = None;
        for (c, ch) in line.chars().enumerate() {
            if ch == '#' {
                break;
            }
            let boundary = ch.is_whitespace() || ch == '{' || ch == '}';
            if boundary {
                out.extend(word.take());
                if !ch.is_whitespace() {
                    out.push(Token { text: ch.to_string(), line: ln + 1, col: c + 1 });
                }
            } else {
                word.get_or_insert_with(|| Token { text: String::new(), line: ln + 1, col: c + 1 }).text.push(ch);
            }
        }
        out.extend(word);
    }
    out
}

#[derive(Clone, Debug)]
pub enum Item {
    Algebra(Arc<Algebra>),
    Morphism(AlgebraMorphism),
    Bimodule(Arc<Bimodule>),
    Net(Net),
    Defect(Defect),
    Sector(Sector),
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Algebra(_) => "algebra",
            Item::Morphism(_) => "morphism",
            Item::Bimodule(_) => "bimodule",
            Item::Net(_) => "net",
            Item::Defect(_) => "defect",
            Item::Sector(_) => "sector",
        }
    }
}

/// Named, validated objects in declaration order.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    items: Vec<(String, Item)>,
    index: HashMap<String, usize>,
}

macro_rules! getter {
    ($fn:ident, $variant:ident, $ty:ty) => {
        pub fn $fn(&self, name: &str) -> Result<&$ty, String> {
            match self.get(name)? {
                Item::$variant(x) => Ok(x),
                other => Err(format!("`{name}` is a {}, not a {}", other.kind(), stringify!($fn))),
            }
        }
    };
}

impl Workspace {
    pub fn parse(src: &str) -> Parsed<Workspace> {
        let mut p = Parser { tokens: tokenize(src), pos: 0, ws: Workspace::default(), end: end_of(src) };
        while let Some(t) = p.peek().cloned() {
            let (name, item) = match t.text.as_str() {
                "algebra" => p.algebra()?,
                "morphism" => p.morphism()?,
                "bimodule" => p.bimodule()?,
                "net" => p.net()?,
                "defect" => p.defect()?,
                "sector" => p.sector()?,
                other => return Err(t.error(format!("expected a block keyword, found `{other}`"))),
            };
            p.ws.index.insert(name.clone(), p.ws.items.len());
            p.ws.items.push((name, item));
        }
        Ok(p.ws)
    }

    pub fn items(&self) -> &[(String, Item)] {
        &self.items
    }

    pub fn get(&self, name: &str) -> Result<&Item, String> {
        self.index.get(name).map(|&i| &self.items[i].1).ok_or_else(|| format!("no object named `{name}`"))
    }

    getter!(algebra, Algebra, Arc<Algebra>);
    getter!(morphism, Morphism, AlgebraMorphism);
    getter!(net, Net, Net);
    getter!(defect, Defect, Defect);
    getter!(sector, Sector, Sector);
}

fn end_of(src: &str) -> (usize, usize) {
    let lines: Vec<&str> = src.lines().collect();
    match lines.last() {
        Some(l) => (lines.len(), l.chars().count() + 1),
        None => (1, 1),
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    ws: Workspace,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self, what: &str) -> Parsed<Token> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(Diagnostic {
                line: self.end.0,
                col: self.end.1,
                message: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn expect(&mut self, lit: &str) -> Parsed<Token> {
        let t = self.next(&format!("`{lit}`"))?;
        if t.text != lit {
            return Err(t.error(format!("expected `{lit}`, found `{}`", t.text)));
        }
        Ok(t)
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.peek().is_some_and(|t| t.text == lit) {
            self.pos += 1;
            return true;
        }
        false
    }

    fn fresh_name(&mut self) -> Parsed<Token> {
        let t = self.next("a name")?;
        if t.text == "{" || t.text == "}" {
            return Err(t.error(format!("expected a name, found `{}`", t.text)));
        }
        if self.ws.index.contains_key(&t.text) {
            return Err(t.error(format!("`{}` is already defined", t.text)));
        }
        Ok(t)
    }

    fn reference<T>(&mut self, get: impl Fn(&Workspace, &str) -> Result<T, String>) -> Parsed<(Token, T)> {
        let t = self.next("a name")?;
        let x = get(&self.ws, &t.text).map_err(|m| t.error(m))?;
        Ok((t, x))
    }

    fn number(&mut self, what: &str) -> Parsed<(Token, usize)> {
        let t = self.next(what)?;
        let n = t.text.parse().map_err(|_| t.error(format!("expected {what}, found `{}`", t.text)))?;
        Ok((t, n))
    }

    fn vector(&mut self, len: usize) -> Parsed<Vec<Rational>> {
        let t = self.next("a vector")?;
        let v: Vec<Rational> = t
            .text
            .split(',')
            .map(|s| s.parse::<Rational>())
            .collect::<Result<_, _>>()
            .map_err(|e| t.error(e.to_string()))?;
        if v.len() != len {
            return Err(t.error(format!("vector has {} entries, expected {len}", v.len())));
        }
        Ok(v)
    }

    /// `{ row <vec> ... }` with exactly `rows` rows of length `cols`.
    fn matrix(&mut self, rows: usize, cols: usize) -> Parsed<Matrix> {
        self.expect("{")?;
        let mut data = Vec::with_capacity(rows);
        loop {
            let t = self.next("`row` or `}`")?;
            match t.text.as_str() {
                "row" if data.len() < rows => data.push(self.vector(cols)?),
                "row" => return Err(t.error(format!("too many rows, expected {rows}"))),
                "}" if data.len() == rows => break,
                "}" => return Err(t.error(format!("found {} rows, expected {rows}", data.len()))),
                other => return Err(t.error(format!("expected `row` or `}}`, found `{other}`"))),
            }
        }
        Ok(Matrix::from_rows(cols, data).expect("row lengths checked"))
    }

    /// `<kw> <name> : <x> <sep> <y>` header.
    fn header<T>(
        &mut self,
        sep: &str,
        get: impl Fn(&Workspace, &str) -> Result<T, String> + Copy,
    ) -> Parsed<(Token, T, T)> {
        self.pos += 1;
        let name = self.fresh_name()?;
        self.expect(":")?;
        let (_, x) = self.reference(get)?;
        self.expect(sep)?;
        let (_, y) = self.reference(get)?;
        Ok((name, x, y))
    }

    fn algebra(&mut self) -> Parsed<(String, Item)> {
        self.pos += 1;
        let name = self.fresh_name()?;
        self.expect("{")?;
        self.expect("dim")?;
        let (dt, dim) = self.number("a dimension")?;
        if dim == 0 {
            return Err(dt.error("dimension must be positive"));
        }
        self.expect("unit")?;
        let unit = self.vector(dim)?;
        let mut products: Vec<Option<sparse::SparseVec>> = vec![None; dim * dim];
        loop {
            let t = self.next("`mul` or `}`")?;
            match t.text.as_str() {
                "}" => break,
                "mul" => {
                    let (it, i) = self.number("a basis index")?;
                    let (jt, j) = self.number("a basis index")?;
                    for (tok, k) in [(&it, i), (&jt, j)] {
                        if k >= dim {
                            return Err(tok.error(format!("basis index {k} out of range for dimension {dim}")));
                        }
                    }
                    self.expect("->")?;
                    let v = self.vector(dim)?;
                    if products[i * dim + j].replace(sparse::from_dense(&v)).is_some() {
                        return Err(t.error(format!("product {i} {j} given twice")));
                    }
                }
                other => return Err(t.error(format!("expected `mul` or `}}`, found `{other}`"))),
            }
        }
        let products = products.into_iter().map(Option::unwrap_or_default).collect();
        let a =
            Algebra::from_products(name.text.clone(), dim, unit, products).map_err(|e| name.error(e.to_string()))?;
        if let Some(v) = a.validate().first() {
            return Err(name.error(format!("algebra `{}`: {v}", name.text)));
        }
        Ok((name.text, Item::Algebra(Arc::new(a))))
    }

    fn morphism(&mut self) -> Parsed<(String, Item)> {
        let (name, src, dst) = self.header("->", |w, n| w.algebra(n).cloned())?;
        let m = self.matrix(dst.dim(), src.dim())?;
        let f =
            AlgebraMorphism::checked(src, dst, m).map_err(|e| name.error(format!("morphism `{}`: {e}", name.text)))?;
        Ok((name.text, Item::Morphism(f)))
    }

    fn bimodule(&mut self) -> Parsed<(String, Item)> {
        let (name, d, e) = self.header("-", |w, n| w.algebra(n).cloned())?;
        self.expect("{")?;
        let fail = |e: comalg::Error| name.error(format!("bimodule `{}`: {e}", name.text));
        if self.eat("regular") {
            self.expect("}")?;
            if d != e {
                return Err(name.error(format!("bimodule `{}`: a regular bimodule needs equal algebras", name.text)));
            }
            return Ok((name.text, Item::Bimodule(Arc::new(Bimodule::regular(&d)))));
        }
        self.expect("dim")?;
        let (_, dim) = self.number("a dimension")?;
        let mut left = vec![None; d.dim()];
        let mut right = vec![None; e.dim()];
        loop {
            let t = self.next("`left`, `right` or `}`")?;
            let slots = match t.text.as_str() {
                "}" => break,
                "left" => &mut left,
                "right" => &mut right,
                other => return Err(t.error(format!("expected `left`, `right` or `}}`, found `{other}`"))),
            };
            let (it, i) = self.number("a basis index")?;
            if i >= slots.len() {
                return Err(it.error(format!("basis index {i} out of range for dimension {}", slots.len())));
            }
            let m = self.matrix(dim, dim)?;
            if slots[i].replace(m).is_some() {
                return Err(t.error(format!("{} action of {i} given twice", t.text)));
            }
        }
        let collect = |side: &str, slots: Vec<Option<Matrix>>| -> Parsed<Vec<Matrix>> {
            slots
                .into_iter()
                .enumerate()
                .map(|(i, m)| {
                    m.ok_or_else(|| name.error(format!("bimodule `{}`: missing {side} action of {i}", name.text)))
                })
                .collect()
        };
        let (left, right) = (collect("left", left)?, collect("right", right)?);
        let m = Bimodule::checked(d, e, dim, left, right).map_err(fail)?;
        Ok((name.text, Item::Bimodule(Arc::new(m))))
    }

    fn net(&mut self) -> Parsed<(String, Item)> {
        self.pos += 1;
        let name = self.fresh_name()?;
        self.expect(":")?;
        let (_, a) = self.reference(|w, n| w.algebra(n).cloned())?;
        let net = Net::new(a).map_err(|e| name.error(format!("net `{}`: {e}", name.text)))?;
        Ok((name.text, Item::Net(net)))
    }

    fn defect(&mut self) -> Parsed<(String, Item)> {
        let (name, a, b) = self.header("-", |w, n| w.net(n).cloned())?;
        let fail = |e: String| name.error(format!("defect `{}`: {e}", name.text));
        self.expect("{")?;
        if self.eat("identity") {
            self.expect("}")?;
            if a != b {
                return Err(fail("an identity defect needs equal nets".into()));
            }
            return Ok((name.text, Item::Defect(identity_defect(&a))));
        }
        self.expect("algebra")?;
        let (_, d) = self.reference(|w, n| w.algebra(n).cloned())?;
        self.expect("phi")?;
        let cols = a.algebra().dim() * b.algebra().dim();
        let phi = if self.peek().is_some_and(|t| t.text == "{") {
            self.matrix(d.dim(), cols)?
        } else {
            let (t, f) = self.reference(|w, n| w.morphism(n).cloned())?;
            if f.matrix().rows() != d.dim() || f.matrix().cols() != cols {
                return Err(t.error(format!("morphism `{}` has the wrong shape for phi", t.text)));
            }
            f.matrix().clone()
        };
        self.expect("}")?;
        let defect = Defect::from_matrix(a, b, d, phi).map_err(|e| fail(e.to_string()))?;
        Ok((name.text, Item::Defect(defect)))
    }

    fn sector(&mut self) -> Parsed<(String, Item)> {
        let (name, top, bottom) = self.header("-", |w, n| w.defect(n).cloned())?;
        let fail = |e: String| name.error(format!("sector `{}`: {e}", name.text));
        self.expect("{")?;
        let sector = if self.eat("identity") {
            if top != bottom {
                return Err(fail("an identity sector needs equal defects".into()));
            }
            Sector::identity(&top)
        } else {
            self.expect("bimodule")?;
            let (_, m) = self.reference(|w, n| match w.get(n)? {
                Item::Bimodule(m) => Ok(m.clone()),
                other => Err(format!("`{n}` is a {}, not a bimodule", other.kind())),
            })?;
            Sector::new(top, bottom, m).map_err(|e| fail(e.to_string()))?
        };
        self.expect("}")?;
        Ok((name.text, Item::Sector(sector)))
    }
}
