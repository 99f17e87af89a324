//! Line-oriented text formats: algebras with an optional form block, cocycle
//! lists, and double-extension data.
//!
//! Serialization is canonical: products in `(i, j)` order, rationals in lowest
//! terms, coefficient `1` omitted, terms joined by ` + `.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;
use zinbiel_core::exactlin::{int, zero_vec, Matrix, Scalar};
use zinbiel_core::extensions::{BilinearForm, DoubleExtensionData};
use zinbiel_core::superalgebra::{default_labels, koszul, AlgebraError, Parity, SuperAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown basis vector `{name}`")]
    UnknownBasis { line: usize, name: String },
    #[error("line {line}: duplicate {what}")]
    Duplicate { line: usize, what: String },
    #[error("line {line}: grading violation: {message}")]
    Grading { line: usize, message: String },
    #[error("missing `dim` header")]
    MissingHeader,
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// An algebra file: the algebra and, when a `form` block is present, its form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: SuperAlgebra,
    pub form: Option<BilinearForm>,
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((k + 1, body))
    })
}

fn parse_scalar(line: usize, s: &str) -> Result<Scalar, FormatError> {
    s.parse::<Scalar>().map_err(|_| syntax(line, format!("`{s}` is not a rational number")))
}

fn lookup(labels: &[String], line: usize, name: &str) -> Result<usize, FormatError> {
    labels
        .iter()
        .position(|l| l == name)
        .ok_or_else(|| FormatError::UnknownBasis { line, name: name.to_string() })
}

/// Parses `c1 name1 + c2 name2 - name3 ...`; a lone `0` is the zero vector.
pub fn parse_vector(labels: &[String], line: usize, text: &str) -> Result<Vec<Scalar>, FormatError> {
    let spaced = text.replace('+', " + ");
    let tokens: Vec<&str> = spaced.split_whitespace().collect();
    let mut v = zero_vec(labels.len());
    if tokens == ["0"] {
        return Ok(v);
    }
    if tokens.is_empty() {
        return Err(syntax(line, "empty right-hand side"));
    }
    let mut k = 0;
    let mut first = true;
    while k < tokens.len() {
        let mut sign = int(1);
        match tokens[k] {
            "+" => k += 1,
            "-" => {
                sign = int(-1);
                k += 1;
            }
            _ if first => {}
            t => return Err(syntax(line, format!("expected `+` or `-` before `{t}`"))),
        }
        first = false;
        let tok = tokens.get(k).ok_or_else(|| syntax(line, "dangling operator"))?;
        let coeff = if let Ok(c) = tok.parse::<Scalar>() {
            k += 1;
            c
        } else {
            int(1)
        };
        let name = tokens.get(k).ok_or_else(|| syntax(line, "coefficient without basis vector"))?;
        let idx = lookup(labels, line, name)?;
        v[idx] += sign * coeff;
        k += 1;
    }
    Ok(v)
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile, FormatError> {
    let mut it = lines(text).peekable();
    let (hline, header) = it.next().ok_or(FormatError::MissingHeader)?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != "dim" {
        return Err(syntax(hline, "expected `dim <n_even> <n_odd>`"));
    }
    let count = |s: &str| s.parse::<usize>().map_err(|_| syntax(hline, format!("`{s}` is not a count")));
    let (n0, n1) = (count(parts[1])?, count(parts[2])?);
    let n = n0 + n1;
    let mut labels = default_labels(n);
    if let Some(&(line, body)) = it.peek() {
        if let Some(rest) = body.strip_prefix("basis") {
            if rest.starts_with(char::is_whitespace) || rest.is_empty() {
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.len() != n {
                    return Err(syntax(line, format!("expected {n} basis names, found {}", names.len())));
                }
                for (k, name) in names.iter().enumerate() {
                    if names[..k].contains(name) {
                        return Err(FormatError::Duplicate { line, what: format!("basis name `{name}`") });
                    }
                    if name.contains(['*', ',', '=', '+']) || name.parse::<Scalar>().is_ok() {
                        return Err(syntax(line, format!("`{name}` is not a valid basis name")));
                    }
                }
                labels = names;
                it.next();
            }
        }
    }
    let parity = |i: usize| if i < n0 { Parity::Even } else { Parity::Odd };
    let mut products: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
    let mut gram: BTreeMap<(usize, usize), (Scalar, bool)> = BTreeMap::new();
    let mut has_form = false;
    for (line, body) in it {
        if let Some(rest) = body.strip_prefix("form") {
            has_form = true;
            let (lhs, rhs) = rest.split_once('=').ok_or_else(|| syntax(line, "expected `form a,b = c`"))?;
            let (a, b) = lhs.split_once(',').ok_or_else(|| syntax(line, "expected `form a,b = c`"))?;
            let i = lookup(&labels, line, a.trim())?;
            let j = lookup(&labels, line, b.trim())?;
            let c = parse_scalar(line, rhs.trim())?;
            if parity(i) != parity(j) && c != int(0) {
                return Err(FormatError::Grading { line, message: "form pairs vectors of different parity".into() });
            }
            if let Some((_, true)) = gram.get(&(i, j)) {
                return Err(FormatError::Duplicate { line, what: format!("form entry {},{}", labels[i], labels[j]) });
            }
            let mirrored = koszul(parity(i), parity(j)) * &c;
            if let Some((old, explicit)) = gram.get(&(j, i)) {
                if *explicit && i != j && *old != mirrored {
                    return Err(syntax(line, "form entry contradicts the supersymmetric completion"));
                }
            }
            if i == j && parity(i) == Parity::Odd && c != int(0) {
                return Err(syntax(line, "odd diagonal form entries vanish by supersymmetry"));
            }
            gram.insert((i, j), (c, true));
            if i != j {
                gram.entry((j, i)).or_insert((mirrored, false));
            }
            continue;
        }
        let (lhs, rhs) = body.split_once('=').ok_or_else(|| syntax(line, "expected `a*b = ...`"))?;
        let (a, b) = lhs.split_once('*').ok_or_else(|| syntax(line, "expected `a*b` on the left"))?;
        let i = lookup(&labels, line, a.trim())?;
        let j = lookup(&labels, line, b.trim())?;
        let v = parse_vector(&labels, line, rhs)?;
        for (k, c) in v.iter().enumerate() {
            if *c != int(0) && parity(k) != parity(i) + parity(j) {
                return Err(FormatError::Grading {
                    line,
                    message: format!("{}*{} cannot have a component along {}", labels[i], labels[j], labels[k]),
                });
            }
        }
        if products.insert((i, j), v).is_some() {
            return Err(FormatError::Duplicate { line, what: format!("product {}*{}", labels[i], labels[j]) });
        }
    }
    let mut entries = Vec::new();
    for ((i, j), v) in &products {
        for (k, c) in v.iter().enumerate() {
            if *c != int(0) {
                entries.push((*i, *j, k, c.clone()));
            }
        }
    }
    let algebra = SuperAlgebra::from_entries(n0, n1, &entries)
        .and_then(|a| a.with_labels(labels))
        .map_err(|e: AlgebraError| FormatError::Grading { line: hline, message: e.to_string() })?;
    let form = has_form.then(|| {
        let mut g = Matrix::zeros(n, n);
        for ((i, j), (c, _)) in gram {
            g.set(i, j, c);
        }
        BilinearForm::new(g)
    });
    Ok(AlgebraFile { algebra, form })
}

/// `c name` terms joined by ` + `, or `0`.
pub fn format_vector(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| **c != int(0))
        .map(|(c, l)| if *c == int(1) { l.clone() } else { format!("{c} {l}") })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn serialize_algebra(a: &SuperAlgebra, form: Option<&BilinearForm>) -> String {
    let mut out = format!("dim {} {}\n", a.n_even(), a.n_odd());
    let labels = a.labels();
    if labels != default_labels(a.dim()).as_slice() {
        let _ = writeln!(out, "basis {}", labels.join(" "));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let v = a.basis_product_vec(i, j);
            if v.iter().any(|c| *c != int(0)) {
                let _ = writeln!(out, "{}*{} = {}", labels[i], labels[j], format_vector(labels, &v));
            }
        }
    }
    if let Some(f) = form {
        for i in 0..a.dim() {
            for j in i..a.dim() {
                let c = f.entry(i, j);
                if *c != int(0) {
                    let _ = writeln!(out, "form {},{} = {}", labels[i], labels[j], c);
                }
            }
        }
    }
    out
}

/// Parses `cocycle even|odd` blocks of `a,b = c` lines against `a`'s basis.
pub fn parse_cocycles(text: &str, a: &SuperAlgebra) -> Result<Vec<(Matrix, Parity)>, FormatError> {
    let n = a.dim();
    let labels = a.labels();
    let mut out: Vec<(Matrix, Parity)> = Vec::new();
    let mut seen: Vec<Vec<(usize, usize)>> = Vec::new();
    for (line, body) in lines(text) {
        if let Some(rest) = body.strip_prefix("cocycle") {
            let p = match rest.trim() {
                "even" => Parity::Even,
                "odd" => Parity::Odd,
                other => return Err(syntax(line, format!("expected `cocycle even|odd`, found `{other}`"))),
            };
            out.push((Matrix::zeros(n, n), p));
            seen.push(Vec::new());
            continue;
        }
        let Some((m, p)) = out.last_mut() else {
            return Err(syntax(line, "entry before the first `cocycle` header"));
        };
        let (lhs, rhs) = body.split_once('=').ok_or_else(|| syntax(line, "expected `a,b = c`"))?;
        let (x, y) = lhs.split_once(',').ok_or_else(|| syntax(line, "expected `a,b = c`"))?;
        let i = lookup(labels, line, x.trim())?;
        let j = lookup(labels, line, y.trim())?;
        let c = parse_scalar(line, rhs.trim())?;
        if c != int(0) && a.parity(i) + a.parity(j) != *p {
            return Err(FormatError::Grading { line, message: "entry does not match the cocycle parity".into() });
        }
        let s = seen.last_mut().expect("pushed with the header");
        if s.contains(&(i, j)) {
            return Err(FormatError::Duplicate { line, what: format!("cocycle entry {},{}", labels[i], labels[j]) });
        }
        s.push((i, j));
        m.set(i, j, c);
    }
    Ok(out)
}

pub fn serialize_cocycles(a: &SuperAlgebra, cocycles: &[(Matrix, Parity)]) -> String {
    let labels = a.labels();
    let mut out = String::new();
    for (m, p) in cocycles {
        let _ = writeln!(out, "cocycle {}", if *p == Parity::Even { "even" } else { "odd" });
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if *m.get(i, j) != int(0) {
                    let _ = writeln!(out, "{},{} = {}", labels[i], labels[j], m.get(i, j));
                }
            }
        }
    }
    out
}

/// Double-extension data as read from a file; `D` is present for odd data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataFile {
    pub alpha: Scalar,
    pub a0: Vec<Scalar>,
    pub delta: Matrix,
    pub d_map: Option<Matrix>,
}

pub fn parse_data(text: &str, a: &SuperAlgebra) -> Result<DataFile, FormatError> {
    let n = a.dim();
    let labels = a.labels();
    let mut data = DataFile { alpha: int(0), a0: zero_vec(n), delta: Matrix::zeros(n, n), d_map: None };
    let mut seen: Vec<String> = Vec::new();
    for (line, body) in lines(text) {
        let (lhs, rhs) = body.split_once('=').ok_or_else(|| syntax(line, "expected `key = value`"))?;
        let key = lhs.split_whitespace().collect::<Vec<_>>().join(" ");
        if seen.contains(&key) {
            return Err(FormatError::Duplicate { line, what: format!("`{key}`") });
        }
        seen.push(key.clone());
        let parts: Vec<&str> = key.split(' ').collect();
        match parts.as_slice() {
            ["alpha"] => data.alpha = parse_scalar(line, rhs.trim())?,
            ["a0"] => data.a0 = parse_vector(labels, line, rhs)?,
            [map @ ("delta" | "D"), x] => {
                let i = lookup(labels, line, x)?;
                let v = parse_vector(labels, line, rhs)?;
                let m = if *map == "delta" {
                    &mut data.delta
                } else {
                    data.d_map.get_or_insert_with(|| Matrix::zeros(n, n))
                };
                for (k, c) in v.into_iter().enumerate() {
                    m.set(k, i, c);
                }
            }
            _ => return Err(syntax(line, format!("unknown key `{key}`"))),
        }
    }
    Ok(data)
}

pub fn serialize_data(a: &SuperAlgebra, data: &DoubleExtensionData, parity: Parity) -> String {
    let labels = a.labels();
    let mut out = String::new();
    if parity == Parity::Even {
        let _ = writeln!(out, "alpha = {}", data.alpha);
    }
    let _ = writeln!(out, "a0 = {}", format_vector(labels, &data.a0));
    for i in 0..a.dim() {
        let _ = writeln!(out, "delta {} = {}", labels[i], format_vector(labels, &data.delta.column(i)));
    }
    if parity == Parity::Odd {
        for i in 0..a.dim() {
            let _ = writeln!(out, "D {} = {}", labels[i], format_vector(labels, &data.d_map.column(i)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_syntax() {
        let l = default_labels(3);
        assert_eq!(parse_vector(&l, 1, "e1 - 2 e3").unwrap(), vec![int(1), int(0), int(-2)]);
        assert_eq!(parse_vector(&l, 1, "-1 e2 + 1/2 e1").unwrap()[0], "1/2".parse::<Scalar>().unwrap());
        assert_eq!(parse_vector(&l, 1, "0").unwrap(), zero_vec(3));
        assert!(parse_vector(&l, 1, "e4").is_err());
        assert!(parse_vector(&l, 1, "e1 e2").is_err());
    }

    #[test]
    fn form_completion() {
        let f = parse_algebra("dim 2 2\nform e1,e2 = 1\nform e3,e4 = 1\n").unwrap().form.unwrap();
        assert_eq!(*f.entry(1, 0), int(1));
        assert_eq!(*f.entry(3, 2), int(-1));
    }
}
