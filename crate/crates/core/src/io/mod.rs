//! The line-oriented model file format.
//!
//! ```text
//! # comments start with '#'
//! model heisenberg maxdeg 3
//! gen x deg 1
//! gen y deg 1
//! gen z deg 1
//! d z = x*y
//! ```
//!
//! A file holds one or more `model` sections. A section either declares
//! generators (`gen <id> deg <n> [step <J>]`) and differentials
//! (`d <id> = <expr>`; undeclared differentials are zero), or names a random
//! model with `random seed <s> kind <kind>`. After the sections come optional
//! blocks
//!
//! ```text
//! morphism phi from A to B
//! map x = 2*u
//! end
//! ```
//!
//! and `homotopy` blocks of the same shape whose expressions may use the
//! reserved factors `t` and `dt`. The target `ground` names ℚ.

mod corpus;
mod expr;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_traits::One;
use thiserror::Error;

use crate::gca::{Cdga, Element, Generator, Universe};
use crate::homotopy::{AlgebraicHomotopy, DgaMorphism, IntervalElement};
use crate::model::sampler::{from_seed, SampleKind, SamplerConfig};
use crate::model::MinimalModel;

pub use corpus::{bundled, fixture, fixtures, BundledFile, BUNDLED, FIXTURES};
pub use expr::{parse_expr, Factor, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("duplicate generator id `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("`{0}` is reserved")]
    Reserved(String),
    #[error("second differential for `{0}`")]
    DuplicateDifferential(String),
    #[error(
        "degree mismatch for `{id}`: expected degree {expected}, found a term of degree {found}"
    )]
    DegreeMismatch {
        id: String,
        expected: u32,
        found: u32,
    },
    #[error("d {0}: word length 1 violates minimality")]
    NotMinimal(String),
    #[error("generator `{id}` has degree {degree} above maxdeg {max}")]
    AboveMaxDegree { id: String, degree: u32, max: u32 },
    #[error("{0}")]
    Model(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Every error found in a file, in line order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseErrors(pub Vec<ParseError>);

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSource {
    Explicit,
    Recipe { seed: u64, kind: SampleKind },
}

#[derive(Debug, Clone)]
pub struct ModelSection {
    pub model: MinimalModel,
    pub source: ModelSource,
}

#[derive(Debug, Clone)]
pub struct NamedMorphism {
    pub name: String,
    pub from: String,
    pub to: String,
    pub morphism: DgaMorphism,
}

#[derive(Debug, Clone)]
pub struct NamedHomotopy {
    pub name: String,
    pub from: String,
    pub to: String,
    pub homotopy: AlgebraicHomotopy,
}

#[derive(Debug, Clone)]
pub struct ModelFile {
    pub sections: Vec<ModelSection>,
    pub morphisms: Vec<NamedMorphism>,
    pub homotopies: Vec<NamedHomotopy>,
}

impl ModelFile {
    /// The first model.
    pub fn primary(&self) -> &MinimalModel {
        &self.sections[0].model
    }

    pub fn model(&self, name: &str) -> Option<&MinimalModel> {
        self.sections
            .iter()
            .map(|s| &s.model)
            .find(|m| m.name() == name)
    }

    pub fn morphism(&self, name: &str) -> Option<&DgaMorphism> {
        self.morphisms
            .iter()
            .find(|m| m.name == name)
            .map(|m| &m.morphism)
    }

    pub fn homotopy(&self, name: &str) -> Option<&AlgebraicHomotopy> {
        self.homotopies
            .iter()
            .find(|m| m.name == name)
            .map(|m| &m.homotopy)
    }
}

const RESERVED: [&str; 3] = ["t", "dt", "ground"];

struct SectionDraft {
    line: usize,
    name: String,
    max_degree: u32,
    gens: Vec<(usize, Generator)>,
    diffs: Vec<(usize, String, String)>,
    recipe: Option<(usize, u64, SampleKind)>,
}

struct BlockDraft {
    line: usize,
    homotopy: bool,
    name: String,
    from: String,
    to: String,
    maps: Vec<(usize, String, String)>,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    err(line, ParseErrorKind::Syntax(msg.into()))
}

fn parse_u32(line: usize, s: &str, what: &str) -> Result<u32, ParseError> {
    s.parse().map_err(|_| {
        syntax(
            line,
            format!("{what} must be a nonnegative integer, found `{s}`"),
        )
    })
}

/// Parses a whole file.
pub fn parse_file(text: &str) -> Result<ModelFile, ParseErrors> {
    let mut errors = Vec::new();
    let mut sections: Vec<SectionDraft> = Vec::new();
    let mut blocks: Vec<BlockDraft> = Vec::new();
    let mut open_block = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let res: Result<(), ParseError> = (|| {
            if open_block {
                match words[0] {
                    "end" if words.len() == 1 => open_block = false,
                    "map" => {
                        let (lhs, rhs) = split_assignment(line, content, "map")?;
                        blocks.last_mut().unwrap().maps.push((line, lhs, rhs));
                    }
                    _ => return Err(syntax(line, "expected `map <id> = <expr>` or `end`")),
                }
                return Ok(());
            }
            match words[0] {
                "model" => {
                    let [_, name, "maxdeg", n] = words[..] else {
                        return Err(syntax(line, "expected `model <name> maxdeg <N>`"));
                    };
                    if !blocks.is_empty() {
                        return Err(syntax(
                            line,
                            "model sections must precede morphism and homotopy blocks",
                        ));
                    }
                    sections.push(SectionDraft {
                        line,
                        name: name.to_string(),
                        max_degree: parse_u32(line, n, "maxdeg")?,
                        gens: Vec::new(),
                        diffs: Vec::new(),
                        recipe: None,
                    });
                }
                "gen" => {
                    let s = sections
                        .last_mut()
                        .ok_or_else(|| syntax(line, "`gen` before any `model` line"))?;
                    let (id, deg, step) = match words[..] {
                        [_, id, "deg", n] => (id, n, None),
                        [_, id, "deg", n, "step", j] => (id, n, Some(j)),
                        _ => return Err(syntax(line, "expected `gen <id> deg <n> [step <J>]`")),
                    };
                    if RESERVED.contains(&id) {
                        return Err(err(line, ParseErrorKind::Reserved(id.into())));
                    }
                    if !id
                        .chars()
                        .next()
                        .is_some_and(|c| c.is_alphabetic() || c == '_')
                        || !id.chars().all(|c| c.is_alphanumeric() || c == '_')
                    {
                        return Err(syntax(line, format!("invalid generator id `{id}`")));
                    }
                    let mut g = Generator::new(id, parse_u32(line, deg, "degree")?);
                    if let Some(j) = step {
                        g = g.with_step(parse_u32(line, j, "step")?);
                    }
                    s.gens.push((line, g));
                }
                "d" => {
                    let s = sections
                        .last_mut()
                        .ok_or_else(|| syntax(line, "`d` before any `model` line"))?;
                    let (lhs, rhs) = split_assignment(line, content, "d")?;
                    s.diffs.push((line, lhs, rhs));
                }
                "random" => {
                    let s = sections
                        .last_mut()
                        .ok_or_else(|| syntax(line, "`random` before any `model` line"))?;
                    let [_, "seed", seed, "kind", kind] = words[..] else {
                        return Err(syntax(line, "expected `random seed <s> kind <kind>`"));
                    };
                    let seed = seed
                        .parse()
                        .map_err(|_| syntax(line, format!("bad seed `{seed}`")))?;
                    let kind = SampleKind::parse(kind).ok_or_else(|| {
                        let names: Vec<&str> = SampleKind::ALL.iter().map(|k| k.name()).collect();
                        syntax(
                            line,
                            format!(
                                "unknown kind `{kind}`; expected one of {}",
                                names.join(", ")
                            ),
                        )
                    })?;
                    s.recipe = Some((line, seed, kind));
                }
                "morphism" | "homotopy" => {
                    let [kw, name, "from", from, "to", to] = words[..] else {
                        return Err(syntax(
                            line,
                            format!("expected `{} <name> from <model> to <model>`", words[0]),
                        ));
                    };
                    blocks.push(BlockDraft {
                        line,
                        homotopy: kw == "homotopy",
                        name: name.into(),
                        from: from.into(),
                        to: to.into(),
                        maps: Vec::new(),
                    });
                    open_block = true;
                }
                other => return Err(syntax(line, format!("unknown directive `{other}`"))),
            }
            Ok(())
        })();
        if let Err(e) = res {
            errors.push(e);
        }
    }
    if open_block {
        let b = blocks.last().unwrap();
        errors.push(syntax(
            b.line,
            format!("block `{}` is missing `end`", b.name),
        ));
    }
    if sections.is_empty() && errors.is_empty() {
        errors.push(syntax(1, "no `model` line"));
    }
    let mut built: Vec<ModelSection> = Vec::new();
    let mut names = BTreeSet::new();
    for s in &sections {
        if !names.insert(s.name.clone()) {
            errors.push(syntax(s.line, format!("duplicate model name `{}`", s.name)));
            continue;
        }
        match build_section(s) {
            Ok(m) => built.push(m),
            Err(mut es) => errors.append(&mut es),
        }
    }
    let mut morphisms = Vec::new();
    let mut homotopies = Vec::new();
    if errors.is_empty() {
        for b in &blocks {
            let res = if b.homotopy {
                build_homotopy(b, &built).map(|h| homotopies.push(h))
            } else {
                build_morphism(b, &built).map(|m| morphisms.push(m))
            };
            if let Err(mut es) = res {
                errors.append(&mut es);
            }
        }
    }
    if !errors.is_empty() {
        errors.sort_by_key(|e| e.line);
        return Err(ParseErrors(errors));
    }
    Ok(ModelFile {
        sections: built,
        morphisms,
        homotopies,
    })
}

/// Parses a file and returns its first model.
pub fn parse_model(text: &str) -> Result<MinimalModel, ParseErrors> {
    parse_file(text).map(|f| f.sections.into_iter().next().unwrap().model)
}

fn split_assignment(line: usize, content: &str, kw: &str) -> Result<(String, String), ParseError> {
    let rest = content[kw.len()..].trim();
    let Some((lhs, rhs)) = rest.split_once('=') else {
        return Err(syntax(line, format!("expected `{kw} <id> = <expr>`")));
    };
    let lhs = lhs.trim();
    if lhs.is_empty() || lhs.contains(char::is_whitespace) {
        return Err(syntax(
            line,
            format!("expected a single generator id before `=`, found `{lhs}`"),
        ));
    }
    Ok((lhs.to_string(), rhs.trim().to_string()))
}

fn build_section(s: &SectionDraft) -> Result<ModelSection, Vec<ParseError>> {
    if let Some((line, seed, kind)) = s.recipe {
        if let Some((l, _)) = s.gens.first() {
            return Err(vec![syntax(
                *l,
                "a `random` model cannot declare generators",
            )]);
        }
        if let Some((l, _, _)) = s.diffs.first() {
            return Err(vec![syntax(
                *l,
                "a `random` model cannot declare differentials",
            )]);
        }
        if s.max_degree == 0 {
            return Err(vec![syntax(line, "a `random` model needs maxdeg ≥ 1")]);
        }
        let model = from_seed(seed, &SamplerConfig::new(kind, s.max_degree), &s.name);
        return Ok(ModelSection {
            model,
            source: ModelSource::Recipe { seed, kind },
        });
    }
    let mut errors = Vec::new();
    let mut seen = BTreeMap::new();
    let mut gens = Vec::new();
    for (line, g) in &s.gens {
        if seen.insert(g.id.clone(), *line).is_some() {
            errors.push(err(*line, ParseErrorKind::DuplicateGenerator(g.id.clone())));
        } else if g.degree == 0 {
            errors.push(syntax(
                *line,
                format!("generator `{}` needs a positive degree", g.id),
            ));
        } else if g.degree > s.max_degree {
            errors.push(err(
                *line,
                ParseErrorKind::AboveMaxDegree {
                    id: g.id.clone(),
                    degree: g.degree,
                    max: s.max_degree,
                },
            ));
        } else {
            gens.push(g.clone());
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let u = MinimalModel::universe_for(gens, s.max_degree)
        .map_err(|e| vec![err(s.line, ParseErrorKind::Model(e.to_string()))])?;
    let mut images: Vec<Option<Element>> = vec![None; u.len()];
    let mut assigned: BTreeMap<usize, usize> = BTreeMap::new();
    for (line, id, rhs) in &s.diffs {
        let res = (|| {
            let g = u
                .index_of(id)
                .ok_or_else(|| err(*line, ParseErrorKind::UnknownGenerator(id.clone())))?;
            if assigned.insert(g, *line).is_some() {
                return Err(err(
                    *line,
                    ParseErrorKind::DuplicateDifferential(id.clone()),
                ));
            }
            let e = eval_element(*line, rhs, &u)?;
            let expected = u.degree(g) + 1;
            if let Some((m, _)) = e.terms().find(|(m, _)| m.degree(&u) != expected) {
                return Err(err(
                    *line,
                    ParseErrorKind::DegreeMismatch {
                        id: id.clone(),
                        expected,
                        found: m.degree(&u),
                    },
                ));
            }
            if e.terms().any(|(m, _)| m.word_length() == 1) {
                return Err(err(*line, ParseErrorKind::NotMinimal(id.clone())));
            }
            images[g] = Some(e);
            Ok(())
        })();
        if let Err(e) = res {
            errors.push(e);
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let images = images
        .into_iter()
        .map(|e| Some(e.unwrap_or_else(|| Element::zero(&u))))
        .collect();
    let model = crate::gca::Derivation::new(&u, images)
        .map_err(|e| e.to_string())
        .and_then(|d| MinimalModel::new(&s.name, s.max_degree, d).map_err(|e| e.to_string()))
        .map_err(|e| vec![err(s.line, ParseErrorKind::Model(e))])?;
    Ok(ModelSection {
        model,
        source: ModelSource::Explicit,
    })
}

#[allow(clippy::too_many_arguments)]
fn eval_terms<T>(
    line: usize,
    rhs: &str,
    one: T,
    mut factor: impl FnMut(&Factor) -> Result<T, ParseError>,
    mul: impl Fn(&T, &T) -> T,
    add: impl Fn(&T, &T) -> T,
    neg: impl Fn(&T) -> T,
    zero: T,
) -> Result<T, ParseError> {
    let terms = parse_expr(rhs).map_err(|m| syntax(line, m))?;
    let mut out = zero;
    for t in terms {
        let mut prod = mul(&one, &one);
        for f in &t.factors {
            prod = mul(&prod, &factor(f)?);
        }
        out = if t.negative {
            add(&out, &neg(&prod))
        } else {
            add(&out, &prod)
        };
    }
    Ok(out)
}

fn eval_element(line: usize, rhs: &str, u: &Arc<Universe>) -> Result<Element, ParseError> {
    eval_terms(
        line,
        rhs,
        Element::one(u),
        |f| match f {
            Factor::Number(q) => Ok(Element::scalar(u, q.clone())),
            Factor::Power(id, e) => Element::var(u, id)
                .map(|v| v.pow(*e))
                .map_err(|_| err(line, ParseErrorKind::UnknownGenerator(id.clone()))),
        },
        |a, b| a * b,
        |a, b| a + b,
        |a| -a,
        Element::zero(u),
    )
}

fn eval_interval(line: usize, rhs: &str, u: &Arc<Universe>) -> Result<IntervalElement, ParseError> {
    let unit = Element::one(u);
    let pow_of = |base: &IntervalElement, e: u32| {
        let mut out = IntervalElement::constant(&unit);
        for _ in 0..e {
            out = &out * base;
        }
        out
    };
    eval_terms(
        line,
        rhs,
        IntervalElement::constant(&unit),
        |f| match f {
            Factor::Number(q) => Ok(IntervalElement::constant(&Element::scalar(u, q.clone()))),
            Factor::Power(id, e) if id == "t" => {
                Ok(pow_of(&IntervalElement::poly_term(&unit, 1), *e))
            }
            Factor::Power(id, e) if id == "dt" => {
                Ok(pow_of(&IntervalElement::dt_term(&unit, 0), *e))
            }
            Factor::Power(id, e) => Element::var(u, id)
                .map(|v| IntervalElement::constant(&v.pow(*e)))
                .map_err(|_| err(line, ParseErrorKind::UnknownGenerator(id.clone()))),
        },
        |a, b| a * b,
        |a, b| a + b,
        |a| -a,
        IntervalElement::zero(u),
    )
}

fn endpoints(b: &BlockDraft, models: &[ModelSection]) -> Result<(Cdga, Cdga), Vec<ParseError>> {
    let find = |name: &str| -> Result<Cdga, ParseError> {
        if name == "ground" {
            return Ok(Cdga::ground());
        }
        models
            .iter()
            .find(|s| s.model.name() == name)
            .map(|s| s.model.cdga().clone())
            .ok_or_else(|| err(b.line, ParseErrorKind::UnknownModel(name.into())))
    };
    let from = find(&b.from).map_err(|e| vec![e])?;
    if b.from == "ground" {
        return Err(vec![syntax(b.line, "`ground` cannot be a source")]);
    }
    Ok((from, find(&b.to).map_err(|e| vec![e])?))
}

fn source_slot(
    line: usize,
    src: &Cdga,
    id: &str,
    seen: &mut BTreeSet<usize>,
) -> Result<usize, ParseError> {
    let g = src
        .universe()
        .index_of(id)
        .ok_or_else(|| err(line, ParseErrorKind::UnknownGenerator(id.into())))?;
    if !seen.insert(g) {
        return Err(syntax(line, format!("second image for `{id}`")));
    }
    Ok(g)
}

fn check_image_degree(
    line: usize,
    id: &str,
    expected: u32,
    degrees: impl Iterator<Item = u32>,
) -> Result<(), ParseError> {
    for found in degrees {
        if found != expected {
            return Err(err(
                line,
                ParseErrorKind::DegreeMismatch {
                    id: id.into(),
                    expected,
                    found,
                },
            ));
        }
    }
    Ok(())
}

fn build_morphism(
    b: &BlockDraft,
    models: &[ModelSection],
) -> Result<NamedMorphism, Vec<ParseError>> {
    let (src, tgt) = endpoints(b, models)?;
    let mut images = vec![None; src.universe().len()];
    let mut seen = BTreeSet::new();
    let mut errors = Vec::new();
    for (line, id, rhs) in &b.maps {
        let res = (|| {
            let g = source_slot(*line, &src, id, &mut seen)?;
            let e = eval_element(*line, rhs, tgt.universe())?;
            let tu = tgt.universe();
            check_image_degree(
                *line,
                id,
                src.universe().degree(g),
                e.terms().map(|(m, _)| m.degree(tu)),
            )?;
            images[g] = Some(e);
            Ok(())
        })();
        if let Err(e) = res {
            errors.push(e);
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let morphism = DgaMorphism::new(&src, &tgt, images)
        .map_err(|e| vec![err(b.line, ParseErrorKind::Model(e.to_string()))])?;
    Ok(NamedMorphism {
        name: b.name.clone(),
        from: b.from.clone(),
        to: b.to.clone(),
        morphism,
    })
}

fn build_homotopy(
    b: &BlockDraft,
    models: &[ModelSection],
) -> Result<NamedHomotopy, Vec<ParseError>> {
    let (src, tgt) = endpoints(b, models)?;
    let mut images = vec![None; src.universe().len()];
    let mut seen = BTreeSet::new();
    let mut errors = Vec::new();
    for (line, id, rhs) in &b.maps {
        let res = (|| {
            let g = source_slot(*line, &src, id, &mut seen)?;
            let e = eval_interval(*line, rhs, tgt.universe())?;
            let tu = tgt.universe();
            let degs =
                e.poly_part()
                    .values()
                    .flat_map(|x| x.terms().map(|(m, _)| m.degree(tu)).collect::<Vec<_>>())
                    .chain(e.dt_part().values().flat_map(|x| {
                        x.terms().map(|(m, _)| m.degree(tu) + 1).collect::<Vec<_>>()
                    }));
            check_image_degree(*line, id, src.universe().degree(g), degs)?;
            images[g] = Some(e);
            Ok(())
        })();
        if let Err(e) = res {
            errors.push(e);
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let homotopy = AlgebraicHomotopy::new(&src, &tgt, images)
        .map_err(|e| vec![err(b.line, ParseErrorKind::Model(e.to_string()))])?;
    Ok(NamedHomotopy {
        name: b.name.clone(),
        from: b.from.clone(),
        to: b.to.clone(),
        homotopy,
    })
}

/// The canonical text of one model.
pub fn print_model(m: &MinimalModel) -> String {
    let mut out = format!("model {} maxdeg {}\n", m.name(), m.max_degree());
    for g in m.generators() {
        out.push_str(&format!("gen {} deg {}", g.id, g.degree));
        if let Some(j) = g.declared_step {
            out.push_str(&format!(" step {j}"));
        }
        out.push('\n');
    }
    for g in 0..m.universe().len() {
        let dg = m.d_of(g);
        if !dg.is_zero() {
            out.push_str(&format!("d {} = {dg}\n", m.id(g)));
        }
    }
    out
}

/// `b tⁱ dtᵉ` written as `c*m*t^i*dt` products.
pub fn print_interval(e: &IntervalElement) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut push = |b: &Element, i: u32, dt: bool| {
        for (m, q) in b.terms() {
            let mut factors = Vec::new();
            let abs = num_traits::Signed::abs(q);
            if !abs.is_one() || (m.is_one() && i == 0 && !dt) {
                factors.push(crate::rational::format_rational(&abs));
            }
            if !m.is_one() {
                factors.push(m.render(b.universe()));
            }
            match i {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{i}")),
            }
            if dt {
                factors.push("dt".into());
            }
            terms.push((num_traits::Signed::is_negative(q), factors.join("*")));
        }
    };
    for (&i, b) in e.poly_part() {
        push(b, i, false);
    }
    for (&i, b) in e.dt_part() {
        push(b, i, true);
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (neg, s)) in terms.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&s);
    }
    out
}

/// The canonical text of a whole file; recipe sections stay recipes.
pub fn print_file(f: &ModelFile) -> String {
    let mut parts = Vec::new();
    for s in &f.sections {
        parts.push(match &s.source {
            ModelSource::Explicit => print_model(&s.model),
            ModelSource::Recipe { seed, kind } => format!(
                "model {} maxdeg {}\nrandom seed {seed} kind {}\n",
                s.model.name(),
                s.model.max_degree(),
                kind.name()
            ),
        });
    }
    for m in &f.morphisms {
        let mut block = format!("morphism {} from {} to {}\n", m.name, m.from, m.to);
        let u = m.morphism.source().universe();
        for g in 0..u.len() {
            if let Some(e) = m.morphism.image(g) {
                block.push_str(&format!("map {} = {e}\n", u.generator(g).id));
            }
        }
        block.push_str("end\n");
        parts.push(block);
    }
    for h in &f.homotopies {
        let mut block = format!("homotopy {} from {} to {}\n", h.name, h.from, h.to);
        let u = h.homotopy.source().universe();
        for g in 0..u.len() {
            if let Some(e) = h.homotopy.image(g) {
                block.push_str(&format!(
                    "map {} = {}\n",
                    u.generator(g).id,
                    print_interval(e)
                ));
            }
        }
        block.push_str("end\n");
        parts.push(block);
    }
    parts.join("\n")
}

/// The file with comments, blank lines and repeated spaces removed, sections
/// separated by one blank line: what [`print_file`] produces for canonical
/// input.
pub fn strip_comments(text: &str) -> String {
    let mut out = String::new();
    for raw in text.lines() {
        let content = raw
            .split('#')
            .next()
            .unwrap()
            .split_whitespace()
            .collect::<Vec<_>>()
            .join(" ");
        if content.is_empty() {
            continue;
        }
        let opens = content.starts_with("model ")
            || content.starts_with("morphism ")
            || content.starts_with("homotopy ");
        if opens && !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&content);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2() {
        let m = parse_model("model s2 maxdeg 3\ngen x deg 2\ngen y deg 3\nd y = x^2\n").unwrap();
        assert!(m.validate().is_valid());
        assert_eq!(m.d_of(1), &m.var("x").pow(2));
    }

    #[test]
    fn heisenberg() {
        let m = parse_model("model h maxdeg 3\ngen x deg 1\ngen y deg 1\ngen z deg 1\nd z = x*y\n")
            .unwrap();
        assert_eq!(m.nilpotency_class(), Some(2));
    }

    #[test]
    fn word_length_one() {
        let e = parse_model("model b maxdeg 2\ngen x deg 2\ngen z deg 1\nd z = x\n").unwrap_err();
        assert_eq!(e.0[0].line, 4);
        assert_eq!(e.0[0].kind, ParseErrorKind::NotMinimal("z".into()));
        assert_eq!(
            e.to_string(),
            "line 4: d z: word length 1 violates minimality"
        );
    }

    #[test]
    fn positioned_errors() {
        let text =
            "model m maxdeg 3\ngen x deg 1\ngen x deg 2\ngen y deg 1\nd w = x*y\nd y = x*x*x\n";
        let e = parse_model(text).unwrap_err();
        assert_eq!(
            e.0[0],
            err(3, ParseErrorKind::DuplicateGenerator("x".into()))
        );
        let text = "model m maxdeg 3\ngen x deg 1\ngen y deg 1\nd w = x*y\nd y = x*y*y + 2\n";
        let e = parse_model(text).unwrap_err();
        assert_eq!(e.0[0], err(4, ParseErrorKind::UnknownGenerator("w".into())));
        assert_eq!(
            e.0[1],
            err(
                5,
                ParseErrorKind::DegreeMismatch {
                    id: "y".into(),
                    expected: 2,
                    found: 0
                }
            )
        );
    }

    #[test]
    fn blocks_round_trip() {
        let text =
            "model A maxdeg 2\ngen x deg 2\n\nmodel B maxdeg 2\ngen w deg 1\ngen u deg 2\n\n\
                    morphism phi from A to B\nmap x = 1/2*u\nend\n\n\
                    homotopy H from A to B\nmap x = u - w*dt + w*t*dt\nend\n";
        let f = parse_file(text).unwrap();
        assert_eq!(print_file(&f), strip_comments(text));
        let h = f.homotopy("H").unwrap();
        let b = f.model("B").unwrap();
        assert_eq!(h.at_0().image(0), Some(&b.var("u")));
        let again = parse_file(&print_file(&f)).unwrap();
        assert_eq!(again.homotopy("H"), Some(h));
    }

    #[test]
    fn dt_sign() {
        let text =
            "model A maxdeg 2\ngen x deg 2\n\nmodel B maxdeg 2\ngen w deg 1\ngen u deg 2\n\n\
                    homotopy H from A to B\nmap x = dt*w\nend\n";
        let f = parse_file(text).unwrap();
        let b = f.model("B").unwrap();
        assert_eq!(
            f.homotopy("H").unwrap().image(0),
            Some(&IntervalElement::dt_term(&-b.var("w"), 0))
        );
    }

    #[test]
    fn morphism_degree_checked() {
        let text = "model A maxdeg 2\ngen x deg 2\n\nmodel B maxdeg 2\ngen u deg 1\n\nmorphism p from A to B\nmap x = u\nend\n";
        let e = parse_file(text).unwrap_err();
        assert_eq!(e.0[0].line, 8);
    }

    #[test]
    fn recipe_round_trip() {
        let text = "model r maxdeg 4\nrandom seed 7 kind coformal\n";
        let f = parse_file(text).unwrap();
        assert_eq!(print_file(&f), text);
        assert!(f.primary().is_coformal());
        assert!(f.primary().validate().is_valid());
    }

    #[test]
    fn reserved_and_syntax() {
        assert!(parse_model("model m maxdeg 2\ngen t deg 1\n").is_err());
        assert!(parse_model("model m maxdeg 2\ngen x degree 1\n").is_err());
        assert!(parse_model("gen x deg 1\n").is_err());
        assert!(parse_model("").is_err());
    }
}
