//! JSON file formats. Every file carries `"format": "hammock-lab/1"` and
//! unknown fields are rejected. Files that refer to other files (functors,
//! diagrams, presheaves) hold paths relative to their own directory.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{CatDiagram, FinCat, Functor};
use crate::hocolim::SSetDiagram;
use crate::locres::SimpPresheaf;
use crate::modelcat::{validate_relcat, FactorKind, FactorizationTable, ModelStructure, RelCat};
use crate::sset::{SSetMap, TruncSSet};

pub const FORMAT: &str = "hammock-lab/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// `compose` triples `[f, g, h]` mean `h = g ∘ f`; composites with an
/// identity may be omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub format: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: BTreeMap<String, String>,
    pub compose: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelCatFile {
    pub format: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: BTreeMap<String, String>,
    pub compose: Vec<[String; 3]>,
    /// Identities are added when missing; absent means identities only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weq: Option<Vec<String>>,
}

/// Factorizations keyed by morphism id, each `[first, second]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationsFile {
    pub cof_then_tfib: BTreeMap<String, [String; 2]>,
    pub tcof_then_fib: BTreeMap<String, [String; 2]>,
}

/// When `factorizations` is absent both tables are found by search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub format: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: BTreeMap<String, String>,
    pub compose: Vec<[String; 3]>,
    pub weq: Vec<String>,
    pub cof: Vec<String>,
    pub fib: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorizations: Option<FactorizationsFile>,
}

/// `levels[n]` lists simplex ids; `faces[n][i]` and `degeneracies[n][i]`
/// map ids of level `n` to ids of level `n ∓ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SSetFile {
    pub format: String,
    pub k: usize,
    pub levels: Vec<Vec<String>>,
    pub faces: Vec<Vec<BTreeMap<String, String>>>,
    pub degeneracies: Vec<Vec<BTreeMap<String, String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorFile {
    pub format: String,
    pub source: String,
    pub target: String,
    pub objects: BTreeMap<String, String>,
    /// Identities may be omitted.
    pub morphisms: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorAssignment {
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
}

/// A diagram of categories; identity morphisms of the shape may be
/// omitted from `functors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatDiagramFile {
    pub format: String,
    pub shape: String,
    pub fibres: BTreeMap<String, String>,
    #[serde(default)]
    pub functors: BTreeMap<String, FunctorAssignment>,
}

/// A diagram of simplicial sets. Each map is given per level as an id→id
/// object; identity morphisms of the shape may be omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SSetDiagramFile {
    pub format: String,
    pub shape: String,
    pub values: BTreeMap<String, String>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<BTreeMap<String, String>>>,
}

/// A simplicial presheaf: for `f : a → b` the map goes from the value at
/// `b` to the value at `a`. `category` may be a category or a relative
/// category file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresheafFile {
    pub format: String,
    pub category: String,
    pub values: BTreeMap<String, String>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<BTreeMap<String, String>>>,
}

fn parse_error(context: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        context: context.into(),
        message: message.into(),
    }
}

fn parse<T: DeserializeOwned>(text: &str, context: &str) -> Result<T> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| parse_error(context, e.to_string()))?;
    match value.get("format").and_then(|f| f.as_str()) {
        Some(FORMAT) => {}
        Some(other) => {
            return Err(parse_error(
                context,
                format!("unsupported format `{other}`, expected `{FORMAT}`"),
            ))
        }
        None => return Err(parse_error(context, format!("missing \"format\": \"{FORMAT}\" header"))),
    }
    serde_json::from_str(text).map_err(|e| parse_error(context, e.to_string()))
}

fn render<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| parse_error("serialize", e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Objects, morphisms, identities and composites, as written to a file.
type CategoryFields = (
    Vec<String>,
    Vec<MorphismEntry>,
    BTreeMap<String, String>,
    Vec<[String; 3]>,
);

fn category_fields(c: &FinCat) -> CategoryFields {
    let name = |m: usize| c.morphism_name(m).to_string();
    let objects = c.object_names().to_vec();
    let morphisms = c
        .morphism_ids()
        .map(|m| MorphismEntry {
            id: name(m),
            src: c.object_name(c.src(m)).into(),
            dst: c.object_name(c.dst(m)).into(),
        })
        .collect();
    let identities = c
        .objects()
        .map(|o| (c.object_name(o).to_string(), name(c.identity(o))))
        .collect();
    let compose = c
        .composable_pairs()
        .filter(|&(f, g)| !c.is_identity(f) && !c.is_identity(g))
        .map(|(f, g)| [name(f), name(g), name(c.compose(g, f).expect("composable"))])
        .collect();
    (objects, morphisms, identities, compose)
}

fn build_category(
    objects: &[String],
    morphisms: &[MorphismEntry],
    identities: &BTreeMap<String, String>,
    compose: &[[String; 3]],
) -> Result<FinCat> {
    let mut b = FinCat::builder();
    for o in objects {
        b = b.object(o);
    }
    for m in morphisms {
        b = b.morphism(&m.id, &m.src, &m.dst);
    }
    for (o, m) in identities {
        b = b.identity(o, m);
    }
    for [f, g, h] in compose {
        b = b.compose(f, g, h);
    }
    b.build()
}

fn morphism_ids(c: &FinCat, names: &[String]) -> Result<Vec<usize>> {
    names.iter().map(|n| c.morphism_id(n)).collect()
}

fn with_identities(c: &FinCat, mut ids: Vec<usize>) -> Vec<usize> {
    for o in c.objects() {
        if !ids.contains(&c.identity(o)) {
            ids.push(c.identity(o));
        }
    }
    ids
}

pub fn category_to_json(c: &FinCat) -> Result<String> {
    let (objects, morphisms, identities, compose) = category_fields(c);
    render(&CategoryFile {
        format: FORMAT.into(),
        objects,
        morphisms,
        identities,
        compose,
    })
}

pub fn category_from_json(text: &str) -> Result<FinCat> {
    let f: CategoryFile = parse(text, "category")?;
    build_category(&f.objects, &f.morphisms, &f.identities, &f.compose)
}

pub fn relcat_to_json(r: &RelCat) -> Result<String> {
    let (objects, morphisms, identities, compose) = category_fields(&r.cat);
    let weq = r
        .weq_ids()
        .into_iter()
        .filter(|&m| !r.cat.is_identity(m))
        .map(|m| r.cat.morphism_name(m).to_string())
        .collect();
    render(&RelCatFile {
        format: FORMAT.into(),
        objects,
        morphisms,
        identities,
        compose,
        weq: Some(weq),
    })
}

/// Accepts category and relative category files.
pub fn relcat_from_json(text: &str) -> Result<RelCat> {
    let f: RelCatFile = parse(text, "relative category")?;
    let c = Arc::new(build_category(&f.objects, &f.morphisms, &f.identities, &f.compose)?);
    let weq = with_identities(&c, morphism_ids(&c, f.weq.as_deref().unwrap_or(&[]))?);
    validate_relcat(c, &weq)
}

fn names(c: &FinCat, ids: Vec<usize>) -> Vec<String> {
    ids.into_iter().map(|m| c.morphism_name(m).to_string()).collect()
}

fn table_to_map(c: &FinCat, t: &FactorizationTable) -> BTreeMap<String, [String; 2]> {
    t.entries()
        .iter()
        .enumerate()
        .filter_map(|(f, e)| {
            e.map(|(g, h)| {
                (
                    c.morphism_name(f).to_string(),
                    [c.morphism_name(g).to_string(), c.morphism_name(h).to_string()],
                )
            })
        })
        .collect()
}

fn map_to_table(c: &FinCat, map: &BTreeMap<String, [String; 2]>) -> Result<FactorizationTable> {
    let mut entries = vec![None; c.num_morphisms()];
    for (f, [g, h]) in map {
        entries[c.morphism_id(f)?] = Some((c.morphism_id(g)?, c.morphism_id(h)?));
    }
    Ok(FactorizationTable::new(entries))
}

pub fn model_to_json(m: &ModelStructure) -> Result<String> {
    let c = &*m.cat;
    let (objects, morphisms, identities, compose) = category_fields(c);
    render(&ModelFile {
        format: FORMAT.into(),
        objects,
        morphisms,
        identities,
        compose,
        weq: names(c, m.weq_ids()),
        cof: names(c, m.cof_ids()),
        fib: names(c, m.fib_ids()),
        factorizations: Some(FactorizationsFile {
            cof_then_tfib: table_to_map(c, m.table(FactorKind::CofThenTfib)),
            tcof_then_fib: table_to_map(c, m.table(FactorKind::TcofThenFib)),
        }),
    })
}

/// Parses without checking the model axioms; see
/// [`crate::modelcat::validate_model_structure`].
pub fn model_from_json(text: &str) -> Result<ModelStructure> {
    let f: ModelFile = parse(text, "model structure")?;
    let c = Arc::new(build_category(&f.objects, &f.morphisms, &f.identities, &f.compose)?);
    let (weq, cof, fib) = (
        morphism_ids(&c, &f.weq)?,
        morphism_ids(&c, &f.cof)?,
        morphism_ids(&c, &f.fib)?,
    );
    match &f.factorizations {
        None => ModelStructure::with_searched_factorizations(c, &weq, &cof, &fib),
        Some(t) => {
            let cf = map_to_table(&c, &t.cof_then_tfib)?;
            let tcf = map_to_table(&c, &t.tcof_then_fib)?;
            ModelStructure::new(c, &weq, &cof, &fib, cf, tcf)
        }
    }
}

/// Simplex ids: labels when they are distinct within each level,
/// otherwise `#i`.
fn simplex_ids(x: &TruncSSet) -> Vec<Vec<String>> {
    (0..=x.k())
        .map(|n| {
            let labels = x.labels(n);
            let mut seen = std::collections::HashSet::new();
            if labels.iter().all(|l| seen.insert(l.as_str())) {
                labels.to_vec()
            } else {
                (0..labels.len()).map(|i| format!("#{i}")).collect()
            }
        })
        .collect()
}

pub fn sset_to_json(x: &TruncSSet) -> Result<String> {
    let ids = simplex_ids(x);
    let k = x.k();
    let op = |n: usize, m: usize, f: &dyn Fn(usize) -> usize| -> BTreeMap<String, String> {
        (0..x.len(n))
            .map(|s| (ids[n][s].clone(), ids[m][f(s)].clone()))
            .collect()
    };
    let faces = (0..=k)
        .map(|n| {
            if n == 0 {
                vec![]
            } else {
                (0..=n).map(|i| op(n, n - 1, &|s| x.face(n, i, s))).collect()
            }
        })
        .collect();
    let degeneracies = (0..=k)
        .map(|n| {
            if n == k {
                vec![]
            } else {
                (0..=n).map(|i| op(n, n + 1, &|s| x.degen(n, i, s))).collect()
            }
        })
        .collect();
    render(&SSetFile {
        format: FORMAT.into(),
        k,
        levels: ids,
        faces,
        degeneracies,
    })
}

fn id_index(level: &[String], context: &str) -> Result<BTreeMap<String, usize>> {
    let mut index = BTreeMap::new();
    for (i, s) in level.iter().enumerate() {
        if index.insert(s.clone(), i).is_some() {
            return Err(parse_error(context, format!("duplicate simplex id `{s}`")));
        }
    }
    Ok(index)
}

fn operator(
    map: &BTreeMap<String, String>,
    from: &BTreeMap<String, usize>,
    to: &BTreeMap<String, usize>,
    what: &str,
) -> Result<Vec<usize>> {
    let mut out = vec![usize::MAX; from.len()];
    for (s, t) in map {
        let (&i, &j) = from
            .get(s)
            .zip(to.get(t))
            .ok_or_else(|| parse_error(what, format!("unknown simplex in `{s}` → `{t}`")))?;
        out[i] = j;
    }
    if out.contains(&usize::MAX) {
        return Err(parse_error(what, "operator is not defined on every simplex"));
    }
    Ok(out)
}

/// Parses and validates the simplicial identities.
pub fn sset_from_json(text: &str) -> Result<TruncSSet> {
    let f: SSetFile = parse(text, "simplicial set")?;
    let k = f.k;
    if f.levels.len() != k + 1 {
        return Err(parse_error("simplicial set", format!("expected {} levels", k + 1)));
    }
    let index: Vec<_> = f
        .levels
        .iter()
        .map(|l| id_index(l, "simplicial set"))
        .collect::<Result<_>>()?;
    let mut faces = Vec::with_capacity(k + 1);
    let mut degens = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let fs = f.faces.get(n).map_or(&[][..], |v| &v[..]);
        faces.push(
            fs.iter()
                .enumerate()
                .map(|(i, m)| operator(m, &index[n], &index[n - 1], &format!("faces[{n}][{i}]")))
                .collect::<Result<Vec<_>>>()?,
        );
        let ds = f.degeneracies.get(n).map_or(&[][..], |v| &v[..]);
        degens.push(
            ds.iter()
                .enumerate()
                .map(|(i, m)| operator(m, &index[n], &index[n + 1], &format!("degeneracies[{n}][{i}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let x = TruncSSet::from_raw(k, f.levels, faces, degens)?;
    let report = x.validate();
    if !report.passed() {
        return Err(Error::SSet(report.failures.join("; ")));
    }
    Ok(x)
}

fn functor_file(f: &Functor, source: &str, target: &str) -> FunctorFile {
    let (s, t) = (&*f.source, &*f.target);
    FunctorFile {
        format: FORMAT.into(),
        source: source.into(),
        target: target.into(),
        objects: s
            .objects()
            .map(|o| (s.object_name(o).to_string(), t.object_name(f.on_object(o)).to_string()))
            .collect(),
        morphisms: s
            .morphism_ids()
            .filter(|&m| !s.is_identity(m))
            .map(|m| {
                (
                    s.morphism_name(m).to_string(),
                    t.morphism_name(f.on_morphism(m)).to_string(),
                )
            })
            .collect(),
    }
}

/// `source` and `target` are the paths written into the file.
pub fn functor_to_json(f: &Functor, source: &str, target: &str) -> Result<String> {
    render(&functor_file(f, source, target))
}

fn pairs(map: &BTreeMap<String, String>) -> Vec<(&str, &str)> {
    map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| parse_error(&path.display().to_string(), e.to_string()))
}

fn with_context<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { context, message } => Error::Parse {
            context: format!("{}: {context}", path.display()),
            message,
        },
        other => other,
    })
}

fn relative(base: &Path, file: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(file)
}

pub fn load_category(path: &Path) -> Result<FinCat> {
    with_context(path, category_from_json(&read(path)?))
}

pub fn load_relcat(path: &Path) -> Result<RelCat> {
    with_context(path, relcat_from_json(&read(path)?))
}

pub fn load_model(path: &Path) -> Result<ModelStructure> {
    with_context(path, model_from_json(&read(path)?))
}

pub fn load_sset(path: &Path) -> Result<TruncSSet> {
    with_context(path, sset_from_json(&read(path)?))
}

/// Reads any file that defines a category: category, relative category or
/// model structure.
pub fn load_any_category(path: &Path) -> Result<FinCat> {
    let text = read(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| parse_error(&path.display().to_string(), e.to_string()))?;
    let r = if value.get("cof").is_some() {
        model_from_json(&text).map(|m| (*m.cat).clone())
    } else if value.get("weq").is_some() {
        relcat_from_json(&text).map(|r| (*r.cat).clone())
    } else {
        category_from_json(&text)
    };
    with_context(path, r)
}

pub fn load_functor(path: &Path) -> Result<Functor> {
    let f: FunctorFile = with_context(path, parse(&read(path)?, "functor"))?;
    let source = Arc::new(load_any_category(&relative(path, &f.source))?);
    let target = Arc::new(load_any_category(&relative(path, &f.target))?);
    with_context(
        path,
        Functor::from_names(source, target, &pairs(&f.objects), &pairs(&f.morphisms)),
    )
}

pub fn load_cat_diagram(path: &Path) -> Result<CatDiagram> {
    let f: CatDiagramFile = with_context(path, parse(&read(path)?, "category diagram"))?;
    let shape = Arc::new(load_any_category(&relative(path, &f.shape))?);
    let fibres = shape
        .object_names()
        .iter()
        .map(|o| {
            let file = f
                .fibres
                .get(o)
                .ok_or_else(|| parse_error("fibres", format!("no fibre for `{o}`")))?;
            Ok(Arc::new(load_any_category(&relative(path, file))?))
        })
        .collect::<Result<Vec<_>>>()?;
    let functors = shape
        .morphism_ids()
        .map(|m| {
            let (s, t) = (fibres[shape.src(m)].clone(), fibres[shape.dst(m)].clone());
            match f.functors.get(shape.morphism_name(m)) {
                Some(a) => Functor::from_names(s, t, &pairs(&a.objects), &pairs(&a.morphisms)),
                None if shape.is_identity(m) => Ok(Functor::identity(s)),
                None => Err(parse_error(
                    "functors",
                    format!("no functor for `{}`", shape.morphism_name(m)),
                )),
            }
        })
        .collect::<Result<Vec<_>>>();
    with_context(path, functors.and_then(|fs| CatDiagram::new(shape, fibres, fs)))
}

fn load_values(path: &Path, objects: &[String], values: &BTreeMap<String, String>) -> Result<Vec<Arc<TruncSSet>>> {
    objects
        .iter()
        .map(|o| {
            let file = values
                .get(o)
                .ok_or_else(|| parse_error("values", format!("no value for `{o}`")))?;
            Ok(Arc::new(load_sset(&relative(path, file))?))
        })
        .collect()
}

fn sset_map(
    source: &Arc<TruncSSet>,
    target: &Arc<TruncSSet>,
    levels: &[BTreeMap<String, String>],
    what: &str,
) -> Result<SSetMap> {
    let (si, ti) = (simplex_ids(source), simplex_ids(target));
    if levels.len() != source.k() + 1 {
        return Err(parse_error(what, format!("expected {} levels", source.k() + 1)));
    }
    let maps = levels
        .iter()
        .enumerate()
        .map(|(n, m)| operator(m, &id_index(&si[n], what)?, &id_index(&ti[n], what)?, what))
        .collect::<Result<Vec<_>>>()?;
    SSetMap::new(source.clone(), target.clone(), maps)
}

/// Maps for each morphism of `shape`; `reversed` makes `f : a → b` act
/// from the value at `b` to the value at `a`.
fn load_maps(
    shape: &FinCat,
    values: &[Arc<TruncSSet>],
    maps: &BTreeMap<String, Vec<BTreeMap<String, String>>>,
    reversed: bool,
) -> Result<Vec<SSetMap>> {
    shape
        .morphism_ids()
        .map(|m| {
            let (mut s, mut t) = (shape.src(m), shape.dst(m));
            if reversed {
                std::mem::swap(&mut s, &mut t);
            }
            let name = shape.morphism_name(m);
            match maps.get(name) {
                Some(levels) => sset_map(&values[s], &values[t], levels, &format!("maps.{name}")),
                None if shape.is_identity(m) => Ok(SSetMap::identity(values[s].clone())),
                None => Err(parse_error("maps", format!("no map for `{name}`"))),
            }
        })
        .collect()
}

pub fn load_sset_diagram(path: &Path) -> Result<SSetDiagram> {
    let f: SSetDiagramFile = with_context(path, parse(&read(path)?, "simplicial set diagram"))?;
    let shape = Arc::new(load_any_category(&relative(path, &f.shape))?);
    let values = load_values(path, shape.object_names(), &f.values)?;
    let maps = with_context(path, load_maps(&shape, &values, &f.maps, false))?;
    with_context(path, SSetDiagram::new(shape, values, maps))
}

/// The presheaf and the relative category it lives over.
pub fn load_presheaf(path: &Path) -> Result<(SimpPresheaf, RelCat)> {
    let f: PresheafFile = with_context(path, parse(&read(path)?, "presheaf"))?;
    let relcat = load_relcat(&relative(path, &f.category))?;
    let values = load_values(path, relcat.cat.object_names(), &f.values)?;
    let maps = with_context(path, load_maps(&relcat.cat, &values, &f.maps, true))?;
    let p = with_context(path, SimpPresheaf::new(relcat.cat.clone(), values, maps))?;
    Ok((p, relcat))
}

fn map_levels(m: &SSetMap) -> Vec<BTreeMap<String, String>> {
    let (si, ti) = (simplex_ids(&m.source), simplex_ids(&m.target));
    (0..=m.source.k())
        .map(|n| {
            m.level(n)
                .iter()
                .enumerate()
                .map(|(s, &t)| (si[n][s].clone(), ti[n][t].clone()))
                .collect()
        })
        .collect()
}

fn named_maps(
    c: &FinCat,
    map: impl Fn(usize) -> Vec<BTreeMap<String, String>>,
) -> BTreeMap<String, Vec<BTreeMap<String, String>>> {
    c.morphism_ids()
        .filter(|&m| !c.is_identity(m))
        .map(|m| (c.morphism_name(m).to_string(), map(m)))
        .collect()
}

/// `category` and `values` (one per object) are the paths written into
/// the file.
pub fn presheaf_to_json(p: &SimpPresheaf, category: &str, values: &[String]) -> Result<String> {
    let c = &*p.cat;
    render(&PresheafFile {
        format: FORMAT.into(),
        category: category.into(),
        values: c.object_names().iter().cloned().zip(values.iter().cloned()).collect(),
        maps: named_maps(c, |m| map_levels(p.map(m))),
    })
}

pub fn sset_diagram_to_json(d: &SSetDiagram, shape: &str, values: &[String]) -> Result<String> {
    let c = &*d.shape;
    render(&SSetDiagramFile {
        format: FORMAT.into(),
        shape: shape.into(),
        values: c.object_names().iter().cloned().zip(values.iter().cloned()).collect(),
        maps: named_maps(c, |m| map_levels(d.map(m))),
    })
}

pub fn cat_diagram_to_json(d: &CatDiagram, shape: &str, fibres: &[String]) -> Result<String> {
    let c = &*d.shape;
    let functors = c
        .morphism_ids()
        .filter(|&m| !c.is_identity(m))
        .map(|m| {
            let f = functor_file(d.functor(m), "", "");
            (
                c.morphism_name(m).to_string(),
                FunctorAssignment {
                    objects: f.objects,
                    morphisms: f.morphisms,
                },
            )
        })
        .collect();
    render(&CatDiagramFile {
        format: FORMAT.into(),
        shape: shape.into(),
        fibres: c.object_names().iter().cloned().zip(fibres.iter().cloned()).collect(),
        functors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fincat::nerve;

    #[test]
    fn categories_round_trip() {
        for (name, c) in corpus::categories() {
            let text = category_to_json(&c).unwrap();
            let back = category_from_json(&text).unwrap();
            assert_eq!(back, *c, "{name}");
            assert_eq!(category_to_json(&back).unwrap(), text);
        }
    }

    #[test]
    fn models_and_relcats_round_trip() {
        for (name, m) in corpus::model_structures() {
            let text = model_to_json(&m).unwrap();
            let back = model_from_json(&text).unwrap();
            assert_eq!(model_to_json(&back).unwrap(), text, "{name}");
        }
        for (name, r) in corpus::relcats() {
            let text = relcat_to_json(&r).unwrap();
            let back = relcat_from_json(&text).unwrap();
            assert_eq!(back.weq_ids(), r.weq_ids(), "{name}");
        }
    }

    #[test]
    fn ssets_round_trip() {
        let x = nerve(&corpus::z2(), 3);
        let text = sset_to_json(&x).unwrap();
        assert_eq!(sset_from_json(&text).unwrap(), x);
        let y = TruncSSet::boundary_simplex(2, 2);
        assert_eq!(
            sset_from_json(&sset_to_json(&y).unwrap()).unwrap().level_counts(),
            y.level_counts()
        );
    }

    #[test]
    fn rejects_bad_input() {
        let c = category_to_json(&corpus::interval()).unwrap();
        let extra = c.replacen("\"objects\"", "\"colour\": 1,\n  \"objects\"", 1);
        assert!(matches!(category_from_json(&extra), Err(Error::Parse { .. })));
        let old = c.replace(FORMAT, "hammock-lab/0");
        assert!(matches!(category_from_json(&old), Err(Error::Parse { .. })));
        let bad = c.replace("\"dst\": \"1\"", "\"dst\": \"7\"");
        assert!(matches!(category_from_json(&bad), Err(Error::Category(_))));
        let e = category_from_json("{\"format\": \"hammock-lab/1\",\n \"objects\": 3}").unwrap_err();
        assert!(e.to_string().contains("line"), "{e}");
    }
}
