//! JSON file format for algebras and the objects that live over them.
//!
//! ```json
//! {
//!   "format": "malcev-super/1",
//!   "evenDim": 3,
//!   "oddDim": 0,
//!   "basisLabels": ["h", "e", "f"],
//!   "products": {
//!     "mul": [
//!       [0, 1, 1, "2"],
//!       ...
//!     ]
//!   },
//!   "representation": {"evenDim": 2, "oddDim": 0, "basisLabels": [..], "entries": [[i, row, col, "c"], ..]},
//!   "bimodule": {"evenDim": .., "oddDim": .., "basisLabels": [..], "left": [..], "right": [..]},
//!   "linearMap": {"domain": "module", "parity": 0, "entries": [[row, col, "c"], ..]},
//!   "tensor": {"parity": 0, "entries": [[i, j, "c"], ..]},
//!   "bilinearForm": {"parity": 0, "entries": [[i, j, "c"], ..]}
//! }
//! ```
//!
//! Every block after `products` is optional. Action entries `[i, row, col, c]`
//! give `ρ(b_i)[row][col]`; the parity of `ρ(b_i)` is that of `b_i`. A linear
//! map goes into the algebra, from the module (`"domain": "module"`) or from
//! the algebra itself. Scalars are strings in reduced form `"p"` or `"p/q"`.
//! Output keeps the key order above, drops zero coefficients and sorts
//! entries lexicographically, so `serialize(parse(serialize(x))) == serialize(x)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde_json::{Map, Value};

use crate::algebra::{Entries, Superalgebra};
use crate::error::{Error, Result};
use crate::graded::{GradedLinearMap, Parity, SuperSpace, Tensor2};
use crate::linalg::{self, Matrix};
use crate::modules::{Bimodule, Representation};
use crate::operators::BilinearForm;
use crate::scalar::Scalar;

pub const FORMAT: &str = "malcev-super/1";

/// An algebra with the optional objects stored alongside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub algebra: Superalgebra,
    pub representation: Option<Representation>,
    pub bimodule: Option<Bimodule>,
    pub linear_map: Option<GradedLinearMap>,
    pub tensor: Option<Tensor2>,
    pub bilinear_form: Option<BilinearForm>,
}

impl Document {
    pub fn new(algebra: Superalgebra) -> Self {
        Document {
            algebra,
            representation: None,
            bimodule: None,
            linear_map: None,
            tensor: None,
            bilinear_form: None,
        }
    }

    pub fn with_representation(mut self, r: Representation) -> Self {
        self.representation = Some(r);
        self
    }

    pub fn with_bimodule(mut self, b: Bimodule) -> Self {
        self.bimodule = Some(b);
        self
    }

    pub fn with_linear_map(mut self, t: GradedLinearMap) -> Self {
        self.linear_map = Some(t);
        self
    }

    pub fn with_tensor(mut self, r: Tensor2) -> Self {
        self.tensor = Some(r);
        self
    }

    pub fn with_bilinear_form(mut self, w: BilinearForm) -> Self {
        self.bilinear_form = Some(w);
        self
    }

    /// The module space that a `"module"`-domain linear map starts from.
    fn module_space(&self) -> Option<&SuperSpace> {
        self.representation
            .as_ref()
            .map(|r| r.space())
            .or_else(|| self.bimodule.as_ref().map(|b| b.space()))
    }
}

/// Parses a document from JSON text.
pub fn parse(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text)?;
    let root = object(&v, "$")?;
    known_keys(
        root,
        "$",
        &["format", "evenDim", "oddDim", "basisLabels", "products", "representation", "bimodule", "linearMap", "tensor", "bilinearForm"],
    )?;
    let format = string(field(root, "$", "format")?, "$.format")?;
    if format != FORMAT {
        return Err(Error::schema("$.format", format!("expected {FORMAT:?}, found {format:?}")));
    }
    let space = parse_space(root, "$")?;
    let products = parse_products(field(root, "$", "products")?, &space)?;
    let algebra = Superalgebra::new(space.clone(), products).map_err(|e| Error::schema("$.products", e.to_string()))?;
    let mut doc = Document::new(algebra);
    if let Some(r) = root.get("representation") {
        doc.representation = Some(parse_representation(r, &doc.algebra)?);
    }
    if let Some(b) = root.get("bimodule") {
        doc.bimodule = Some(parse_bimodule(b, &doc.algebra)?);
    }
    if let Some(m) = root.get("linearMap") {
        doc.linear_map = Some(parse_map(m, &doc)?);
    }
    if let Some(t) = root.get("tensor") {
        let path = "$.tensor";
        let (parity, entries) = parse_pairs(t, path, &space)?;
        doc.tensor = Some(Tensor2::new(space.clone(), entries, parity).map_err(|e| Error::schema(path, e.to_string()))?);
    }
    if let Some(w) = root.get("bilinearForm") {
        let path = "$.bilinearForm";
        let (parity, entries) = parse_pairs(w, path, &space)?;
        if parity != Parity::Even {
            return Err(Error::schema(format!("{path}.parity"), "only parity-0 forms are supported"));
        }
        doc.bilinear_form = Some(BilinearForm::new(space.clone(), entries).map_err(|e| Error::schema(path, e.to_string()))?);
    }
    Ok(doc)
}

pub fn parse_file(path: &std::path::Path) -> Result<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    parse(&text)
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::schema(path, "expected an object"))
}

fn field<'a>(o: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| Error::schema(path, format!("missing field {key:?}")))
}

fn known_keys(o: &Map<String, Value>, path: &str, keys: &[&str]) -> Result<()> {
    match o.keys().find(|k| !keys.contains(&k.as_str())) {
        Some(k) => Err(Error::schema(format!("{path}.{k}"), "unknown field")),
        None => Ok(()),
    }
}

fn string<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| Error::schema(path, "expected a string"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::schema(path, "expected an array"))
}

fn index(v: &Value, path: &str, dim: usize) -> Result<usize> {
    let i = v
        .as_u64()
        .ok_or_else(|| Error::schema(path, "expected a nonnegative integer"))? as usize;
    if i >= dim {
        return Err(Error::schema(path, format!("index {i} out of range for dimension {dim}")));
    }
    Ok(i)
}

fn scalar(v: &Value, path: &str) -> Result<Scalar> {
    let s = string(v, path)?;
    Scalar::parse_canonical(s).map_err(|e| Error::schema(path, e.to_string()))
}

fn parity(v: &Value, path: &str) -> Result<Parity> {
    match v.as_u64() {
        Some(0) => Ok(Parity::Even),
        Some(1) => Ok(Parity::Odd),
        _ => Err(Error::schema(path, "parity must be 0 or 1")),
    }
}

fn parse_space(o: &Map<String, Value>, path: &str) -> Result<SuperSpace> {
    let dim = |key: &str| -> Result<usize> {
        let p = format!("{path}.{key}");
        field(o, path, key)?
            .as_u64()
            .map(|d| d as usize)
            .ok_or_else(|| Error::schema(p, "expected a nonnegative integer"))
    };
    let (even, odd) = (dim("evenDim")?, dim("oddDim")?);
    match o.get("basisLabels") {
        None => Ok(SuperSpace::new(even, odd)),
        Some(l) => {
            let p = format!("{path}.basisLabels");
            let labels = array(l, &p)?
                .iter()
                .enumerate()
                .map(|(i, s)| string(s, &format!("{p}[{i}]")).map(str::to_string))
                .collect::<Result<Vec<_>>>()?;
            SuperSpace::with_labels(even, odd, labels).map_err(|e| Error::schema(p, e.to_string()))
        }
    }
}

/// Entries `[i, j, k, c]` with per-entry range, duplicate and parity checks.
fn parse_products(v: &Value, space: &SuperSpace) -> Result<Vec<(String, Entries)>> {
    let o = object(v, "$.products")?;
    if o.is_empty() {
        return Err(Error::schema("$.products", "at least one product is required"));
    }
    let n = space.dim();
    let mut out = Vec::new();
    for (name, list) in o {
        let path = format!("$.products.{name}");
        let mut seen = HashSet::new();
        let mut entries = Vec::new();
        for (e, item) in array(list, &path)?.iter().enumerate() {
            let p = format!("{path}[{e}]");
            let parts = array(item, &p)?;
            if parts.len() != 4 {
                return Err(Error::schema(p, "expected [i, j, k, scalar]"));
            }
            let i = index(&parts[0], &format!("{p}[0]"), n)?;
            let j = index(&parts[1], &format!("{p}[1]"), n)?;
            let k = index(&parts[2], &format!("{p}[2]"), n)?;
            let c = scalar(&parts[3], &format!("{p}[3]"))?;
            if !seen.insert((i, j, k)) {
                return Err(Error::schema(p, format!("duplicate entry ({i}, {j}, {k})")));
            }
            if !c.is_zero() && space.parity(i) + space.parity(j) != space.parity(k) {
                return Err(Error::schema(
                    p,
                    format!(
                        "parity violation: {} * {} -> {} pairs parities {}, {} with target parity {}",
                        space.label(i),
                        space.label(j),
                        space.label(k),
                        space.parity(i),
                        space.parity(j),
                        space.parity(k)
                    ),
                ));
            }
            entries.push((i, j, k, c));
        }
        out.push((name.clone(), entries));
    }
    Ok(out)
}

/// Entries `[i, row, col, c]` into one matrix per algebra basis element.
fn parse_action(v: &Value, path: &str, n: usize, dv: usize) -> Result<Vec<Matrix>> {
    let mut mats = vec![linalg::zeros(dv, dv); n];
    let mut seen = HashSet::new();
    for (e, item) in array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{e}]");
        let parts = array(item, &p)?;
        if parts.len() != 4 {
            return Err(Error::schema(p, "expected [i, row, col, scalar]"));
        }
        let i = index(&parts[0], &format!("{p}[0]"), n)?;
        let r = index(&parts[1], &format!("{p}[1]"), dv)?;
        let c = index(&parts[2], &format!("{p}[2]"), dv)?;
        if !seen.insert((i, r, c)) {
            return Err(Error::schema(p, format!("duplicate entry ({i}, {r}, {c})")));
        }
        mats[i][r][c] = scalar(&parts[3], &format!("{p}[3]"))?;
    }
    Ok(mats)
}

fn parse_representation(v: &Value, algebra: &Superalgebra) -> Result<Representation> {
    let path = "$.representation";
    let o = object(v, path)?;
    known_keys(o, path, &["evenDim", "oddDim", "basisLabels", "entries"])?;
    let space = parse_space(o, path)?;
    let p = format!("{path}.entries");
    let mats = parse_action(field(o, path, "entries")?, &p, algebra.dim(), space.dim())?;
    Representation::from_matrices(algebra.clone(), space, mats).map_err(|e| Error::schema(p, e.to_string()))
}

fn parse_bimodule(v: &Value, algebra: &Superalgebra) -> Result<Bimodule> {
    let path = "$.bimodule";
    let o = object(v, path)?;
    known_keys(o, path, &["evenDim", "oddDim", "basisLabels", "left", "right"])?;
    let space = parse_space(o, path)?;
    let (n, dv) = (algebra.dim(), space.dim());
    let left = parse_action(field(o, path, "left")?, &format!("{path}.left"), n, dv)?;
    let right = parse_action(field(o, path, "right")?, &format!("{path}.right"), n, dv)?;
    Bimodule::from_matrices(algebra.clone(), space, left, right).map_err(|e| Error::schema(path, e.to_string()))
}

fn parse_map(v: &Value, doc: &Document) -> Result<GradedLinearMap> {
    let path = "$.linearMap";
    let o = object(v, path)?;
    known_keys(o, path, &["domain", "parity", "entries"])?;
    let domain = match string(field(o, path, "domain")?, &format!("{path}.domain"))? {
        "module" => doc
            .module_space()
            .ok_or_else(|| Error::schema(format!("{path}.domain"), "no representation or bimodule block"))?
            .clone(),
        "algebra" => doc.algebra.space().clone(),
        other => return Err(Error::schema(format!("{path}.domain"), format!("expected \"module\" or \"algebra\", found {other:?}"))),
    };
    let cod = doc.algebra.space().clone();
    let par = parity(field(o, path, "parity")?, &format!("{path}.parity"))?;
    let p = format!("{path}.entries");
    let mut m = linalg::zeros(cod.dim(), domain.dim());
    let mut seen = HashSet::new();
    for (e, item) in array(field(o, path, "entries")?, &p)?.iter().enumerate() {
        let pe = format!("{p}[{e}]");
        let parts = array(item, &pe)?;
        if parts.len() != 3 {
            return Err(Error::schema(pe, "expected [row, col, scalar]"));
        }
        let r = index(&parts[0], &format!("{pe}[0]"), cod.dim())?;
        let c = index(&parts[1], &format!("{pe}[1]"), domain.dim())?;
        if !seen.insert((r, c)) {
            return Err(Error::schema(pe, format!("duplicate entry ({r}, {c})")));
        }
        m[r][c] = scalar(&parts[2], &format!("{pe}[2]"))?;
    }
    GradedLinearMap::new(domain, cod, m, par).map_err(|e| Error::schema(path, e.to_string()))
}

fn parse_pairs(v: &Value, path: &str, space: &SuperSpace) -> Result<(Parity, Matrix)> {
    let o = object(v, path)?;
    known_keys(o, path, &["parity", "entries"])?;
    let par = parity(field(o, path, "parity")?, &format!("{path}.parity"))?;
    let n = space.dim();
    let p = format!("{path}.entries");
    let mut m = linalg::zeros(n, n);
    let mut seen = HashSet::new();
    for (e, item) in array(field(o, path, "entries")?, &p)?.iter().enumerate() {
        let pe = format!("{p}[{e}]");
        let parts = array(item, &pe)?;
        if parts.len() != 3 {
            return Err(Error::schema(pe, "expected [i, j, scalar]"));
        }
        let i = index(&parts[0], &format!("{pe}[0]"), n)?;
        let j = index(&parts[1], &format!("{pe}[1]"), n)?;
        if !seen.insert((i, j)) {
            return Err(Error::schema(pe, format!("duplicate entry ({i}, {j})")));
        }
        m[i][j] = scalar(&parts[2], &format!("{pe}[2]"))?;
    }
    Ok((par, m))
}

/// Canonical JSON text of a document, newline-terminated.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::from("{\n");
    let mut fields: Vec<String> = vec![
        format!("  \"format\": {}", json(FORMAT)),
        space_fields(doc.algebra.space(), "  "),
    ];
    let mut products = String::from("  \"products\": {");
    let names = doc.algebra.product_names();
    for (p, name) in names.iter().enumerate() {
        let t = doc.algebra.table(name).expect("listed product");
        let rows: Vec<String> = t
            .entries()
            .into_iter()
            .map(|(i, j, k, c)| format!("[{i}, {j}, {k}, {}]", json(&c.to_string())))
            .collect();
        let sep = if p + 1 < names.len() { "," } else { "" };
        let _ = write!(products, "\n    {}: {}{sep}", json(name), list(&rows, "    "));
    }
    products.push_str("\n  }");
    fields.push(products);
    if let Some(r) = &doc.representation {
        let entries = action_entries(r.actions());
        fields.push(format!(
            "  \"representation\": {{\n{},\n    \"entries\": {}\n  }}",
            space_fields(r.space(), "    "),
            list(&entries, "    ")
        ));
    }
    if let Some(b) = &doc.bimodule {
        let n = b.algebra().dim();
        let left: Vec<GradedLinearMap> = (0..n).map(|i| b.left(i).clone()).collect();
        let right: Vec<GradedLinearMap> = (0..n).map(|i| b.right(i).clone()).collect();
        fields.push(format!(
            "  \"bimodule\": {{\n{},\n    \"left\": {},\n    \"right\": {}\n  }}",
            space_fields(b.space(), "    "),
            list(&action_entries(&left), "    "),
            list(&action_entries(&right), "    ")
        ));
    }
    if let Some(t) = &doc.linear_map {
        let domain = if doc.module_space() == Some(t.domain()) { "module" } else { "algebra" };
        fields.push(format!(
            "  \"linearMap\": {{\n    \"domain\": {},\n    \"parity\": {},\n    \"entries\": {}\n  }}",
            json(domain),
            t.parity().bit(),
            list(&pair_entries(t.matrix()), "    ")
        ));
    }
    if let Some(r) = &doc.tensor {
        fields.push(format!(
            "  \"tensor\": {{\n    \"parity\": {},\n    \"entries\": {}\n  }}",
            r.parity().bit(),
            list(&pair_entries(r.coeffs()), "    ")
        ));
    }
    if let Some(w) = &doc.bilinear_form {
        fields.push(format!(
            "  \"bilinearForm\": {{\n    \"parity\": 0,\n    \"entries\": {}\n  }}",
            list(&pair_entries(w.matrix()), "    ")
        ));
    }
    out.push_str(&fields.join(",\n"));
    out.push_str("\n}\n");
    out
}

fn json(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn space_fields(space: &SuperSpace, indent: &str) -> String {
    let labels: Vec<String> = space.labels().iter().map(|l| json(l)).collect();
    format!(
        "{indent}\"evenDim\": {},\n{indent}\"oddDim\": {},\n{indent}\"basisLabels\": [{}]",
        space.even_dim(),
        space.odd_dim(),
        labels.join(", ")
    )
}

fn list(rows: &[String], indent: &str) -> String {
    if rows.is_empty() {
        return "[]".into();
    }
    let body: Vec<String> = rows.iter().map(|r| format!("{indent}  {r}")).collect();
    format!("[\n{}\n{indent}]", body.join(",\n"))
}

fn action_entries(maps: &[GradedLinearMap]) -> Vec<String> {
    let mut rows = Vec::new();
    for (i, m) in maps.iter().enumerate() {
        for (r, row) in m.matrix().iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    rows.push(format!("[{i}, {r}, {c}, {}]", json(&v.to_string())));
                }
            }
        }
    }
    rows
}

fn pair_entries(m: &Matrix) -> Vec<String> {
    let mut rows = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                rows.push(format!("[{i}, {j}, {}]", json(&v.to_string())));
            }
        }
    }
    rows
}

/// Named fixture documents shipped with the crate, in a fixed order.
pub fn builtin_fixtures() -> BTreeMap<&'static str, Document> {
    use crate::fixtures as fx;
    let mut m = BTreeMap::new();
    m.insert("zero", Document::new(fx::zero_algebra(1, 0)));
    m.insert("sl2", Document::new(fx::sl2()).with_representation(fx::sl2_standard()));
    m.insert("malcev-1-1", Document::new(fx::malcev_1_1()).with_representation(fx::malcev_1_1_module()));
    m.insert("sagle", Document::new(fx::sagle()));
    m.insert("split-octonions", Document::new(fx::split_octonions()));
    m.insert("octonions", Document::new(fx::cayley_dickson(&[-1, -1, 1])));
    m.insert("gl11", Document::new(fx::gl11_associative()).with_bimodule(fx::regular_bimodule(&fx::gl11_associative())));
    m.insert("pre-malcev-1-1", Document::new(fx::pre_malcev_1_1()));
    m.insert("pre-malcev-1-1-b", Document::new(fx::pre_malcev_1_1_b()));
    let sl2 = fx::sl2();
    m.insert("r0", Document::new(sl2.clone()).with_tensor(Tensor2::zero(sl2.space())));
    m.insert("broken", Document::new(fx::malcev_1_1()));
    m.insert("sl2-oop", Document::new(fx::sl2()).with_representation(fx::sl2_standard()).with_linear_map(fx::sl2_standard_oop()));
    let o = fx::split_octonions();
    m.insert(
        "split-octonions-rb",
        Document::new(o.clone()).with_bimodule(fx::regular_bimodule(&o)).with_linear_map(fx::split_octonion_rb()),
    );
    m.insert("pre-alternative-octonions", Document::new(fx::pre_alternative_from_rota_baxter(&o, &fx::split_octonion_rb())));
    if let Ok(c) = crate::yangbaxter::canonical_r(&fx::pre_malcev_1_1()) {
        m.insert("canonical-1-1", Document::new(c.algebra().clone()).with_tensor(c.r().clone()));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn zero_algebra_round_trip() {
        let doc = Document::new(fixtures::zero_algebra(1, 0));
        let text = serialize(&doc);
        assert_eq!(
            text,
            "{\n  \"format\": \"malcev-super/1\",\n  \"evenDim\": 1,\n  \"oddDim\": 0,\n  \"basisLabels\": [\"e1\"],\n  \"products\": {\n    \"mul\": []\n  }\n}\n"
        );
        assert_eq!(serialize(&parse(&text).unwrap()), text);
    }

    #[test]
    fn parity_violation_names_the_entry() {
        let text = r#"{"format": "malcev-super/1", "evenDim": 1, "oddDim": 1,
            "products": {"mul": [[0, 0, 1, "1"]]}}"#;
        match parse(text) {
            Err(Error::Schema { path, message }) => {
                assert_eq!(path, "$.products.mul[0]");
                assert!(message.contains("parity violation"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_canonical_scalar_rejected() {
        let text = r#"{"format": "malcev-super/1", "evenDim": 1, "oddDim": 0,
            "products": {"mul": [[0, 0, 0, "2/4"]]}}"#;
        assert!(matches!(parse(text), Err(Error::Schema { path, .. }) if path == "$.products.mul[0][3]"));
    }
}
