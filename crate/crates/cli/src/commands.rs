use std::collections::BTreeSet;
use std::fmt::Write;

use anyhow::{bail, Context, Result};
use braid_sigma::sigma::strand_count_hint;
use braid_sigma::{
    braids_equal, chi_m_n, classify_links, erase_strands, join, maximal_vertices, meet,
    minimal_vertices, nerve_of_stars, normal_form, one_positive_pair, order_complex,
    parse_braid_word, parse_character, prefix_leq, pw_vertices, reduced_homology, rev_vertices,
    sandwich, weak_leq, BraidWord, ClassifyOptions, ComplexHomology, Error, ExactCharacter,
    Permutation, SimplicialComplex, StarMode,
};
use serde_json::{json, Value};

use crate::{
    BraidArgs, ChiArgs, ClassifyArgs, JoinMeetArgs, NerveArgs, PairArgs, PwArgs, RevArgs, WordArgs,
};

pub struct Report {
    pub json: Value,
    pub text: String,
}

/// 1 for failures during computation, 2 for anything wrong with the input.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Overflow | Error::InconsistentOrder(..)) => 1,
        _ => 2,
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("bad {what} entry `{t}`"))
        })
        .collect()
}

fn parse_pair(text: &str) -> Result<(usize, usize)> {
    match parse_list(text, "pair")?.as_slice() {
        [i, j] => Ok((*i, *j)),
        _ => bail!("expected a pair \"i,j\", got `{text}`"),
    }
}

fn parse_perms(text: &str, n: usize) -> Result<Vec<Permutation>> {
    let perms = text
        .split(';')
        .filter(|t| !t.trim().is_empty())
        .map(Permutation::parse)
        .collect::<braid_sigma::Result<Vec<_>>>()?;
    if let Some(p) = perms.iter().find(|p| p.n() != n) {
        return Err(Error::StrandMismatch {
            left: n,
            right: p.n(),
        }
        .into());
    }
    Ok(perms)
}

fn word_json(w: &BraidWord) -> Value {
    json!({ "n": w.n(), "letters": w.letters() })
}

fn matrix_text(rows: &[Vec<i64>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|v| format!("{v:>3}")).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn braid(a: &BraidArgs) -> Result<Report> {
    let mut w = parse_braid_word(&a.word, a.n)?;
    if a.mirror {
        w = w.mirror();
    }
    if let Some(keep) = &a.erase {
        w = erase_strands(&w, &parse_list(keep, "strand")?)?;
    }
    let inv = w.invariants();
    let rows = inv.twice_windings.rows();
    let json = json!({
        "word": word_json(&w),
        "perm": inv.perm,
        "kappa": inv.kappa,
        "twice_windings": rows,
    });
    let text = format!(
        "word: {}\nperm: {}\nkappa: {}\ntwice windings:\n{}",
        if w.is_empty() {
            "(empty)".to_string()
        } else {
            w.to_string()
        },
        inv.perm,
        inv.kappa,
        matrix_text(&rows)
    );
    Ok(Report { json, text })
}

pub fn nf(a: &WordArgs) -> Result<Report> {
    let w = parse_braid_word(&a.word, a.n)?;
    let nf = normal_form(&w);
    let json = json!({
        "word": word_json(&w),
        "inf": nf.inf,
        "sup": nf.sup(),
        "factors": nf.factors,
        "normal_form": nf.to_string(),
    });
    let text = format!("{nf}\ninf {} sup {}", nf.inf, nf.sup());
    Ok(Report { json, text })
}

fn two_words(a: &PairArgs) -> Result<(BraidWord, BraidWord)> {
    let right_n = a.right_n.unwrap_or(a.n);
    if right_n != a.n {
        return Err(Error::StrandMismatch {
            left: a.n,
            right: right_n,
        }
        .into());
    }
    Ok((
        parse_braid_word(&a.left, a.n)?,
        parse_braid_word(&a.right, right_n)?,
    ))
}

pub fn eq(a: &PairArgs) -> Result<Report> {
    let (x, y) = two_words(a)?;
    let equal = braids_equal(&x, &y)?;
    Ok(Report {
        json: json!({ "left": word_json(&x), "right": word_json(&y), "equal": equal }),
        text: equal.to_string(),
    })
}

pub fn leq(a: &PairArgs) -> Result<Report> {
    let (x, y) = two_words(a)?;
    let le = prefix_leq(&x, &y)?;
    let sw = sandwich(&x, &y)?;
    Ok(Report {
        json: json!({ "left": word_json(&x), "right": word_json(&y), "leq": le, "sandwich": sw }),
        text: format!("leq: {le}\nsandwich: {sw}"),
    })
}

fn homology_report(
    title: String,
    base: Value,
    vertices: Vec<Permutation>,
    max_degree: Option<usize>,
) -> Result<Report> {
    let count = vertices.len();
    let cx = order_complex(
        vertices,
        |x: &Permutation, y| weak_leq(x, y).unwrap_or(false),
        max_degree.map(|d| d + 1),
    )?;
    let h: ComplexHomology = reduced_homology(&cx, max_degree);
    let mut json = base;
    let obj = json.as_object_mut().expect("object");
    obj.insert("vertices".into(), json!(count));
    obj.insert("label".into(), json!(h.profile.label()));
    if let Value::Object(extra) = serde_json::to_value(&h)? {
        obj.extend(extra);
    }
    let dims: Vec<usize> = h.dims.values().copied().collect();
    let text = format!(
        "{title}: {count} vertices, simplices by dimension {dims:?}\nreduced homology: {}",
        h.profile.label()
    );
    Ok(Report { json, text })
}

pub fn rev_homology(a: &RevArgs) -> Result<Report> {
    let (i, j) = parse_pair(&a.pair)?;
    let vs = rev_vertices(a.n, i, j)?;
    let (i, j) = (i.min(j), i.max(j));
    homology_report(
        format!("Rev_{}({i},{j})", a.n),
        json!({ "n": a.n, "pair": [i, j] }),
        vs,
        a.max_degree,
    )
}

pub fn pw_homology(a: &PwArgs) -> Result<Report> {
    homology_report(
        format!("PW_{}", a.n),
        json!({ "n": a.n }),
        pw_vertices(a.n)?,
        a.max_degree,
    )
}

fn facets<V>(cx: &SimplicialComplex<V>) -> Vec<Vec<u32>> {
    let top = cx.dim().map_or(0, |d| d + 1);
    let mut out = Vec::new();
    for d in 0..top {
        let above: Vec<BTreeSet<u32>> = if d + 1 < top {
            cx.simplices(d + 1)
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect()
        } else {
            Vec::new()
        };
        for s in cx.simplices(d) {
            if !above.iter().any(|t| s.iter().all(|v| t.contains(v))) {
                out.push(s.clone());
            }
        }
    }
    out
}

pub fn nerve(a: &NerveArgs) -> Result<Report> {
    let (i, j) = match &a.pair {
        Some(p) => parse_pair(p)?,
        None => (1, a.n),
    };
    let rev = rev_vertices(a.n, i, j)?;
    let (i, j) = (i.min(j), i.max(j));
    let (mode, centers) = if (i, j) == (1, a.n) {
        (StarMode::Max, maximal_vertices(&rev))
    } else {
        (StarMode::Min, minimal_vertices(&rev))
    };
    let ambient: BTreeSet<Permutation> = rev.into_iter().collect();
    let cx = nerve_of_stars(&centers, |p| ambient.contains(p), mode)?;
    let k = centers.len();
    let shape = if cx.is_full_simplex() {
        format!("{}-simplex", k - 1)
    } else if cx.is_simplex_boundary() {
        format!("boundary of a {}-simplex", k - 1)
    } else {
        "other".to_string()
    };
    let facet_list: Vec<Vec<&Permutation>> = facets(&cx)
        .iter()
        .map(|f| f.iter().map(|&v| &cx.vertices()[v as usize]).collect())
        .collect();
    let h = reduced_homology(&cx, None);
    let json = json!({
        "n": a.n,
        "pair": [i, j],
        "mode": mode,
        "centers": centers,
        "facets": facet_list,
        "dims": cx.dims(),
        "full_simplex": cx.is_full_simplex(),
        "simplex_boundary": cx.is_simplex_boundary(),
        "shape": shape,
        "homology": h.profile.label(),
    });
    let centers_text: Vec<String> = centers.iter().map(|c| c.to_string()).collect();
    let text = format!(
        "Rev_{}({i},{j}), stars of {} vertices: {}\nnerve: {shape}, reduced homology {}",
        a.n,
        if mode == StarMode::Max {
            "maximal"
        } else {
            "minimal"
        },
        centers_text.join(" "),
        h.profile.label()
    );
    Ok(Report { json, text })
}

pub fn joinmeet(a: &JoinMeetArgs) -> Result<Report> {
    let set = parse_perms(&a.set, a.n)?;
    let (j, m) = (join(&set)?, meet(&set)?);
    Ok(Report {
        json: json!({ "n": a.n, "set": set, "join": j, "meet": m }),
        text: format!("join: {j}\nmeet: {m}"),
    })
}

pub fn classify(a: &ClassifyArgs, jobs: Option<usize>) -> Result<Report> {
    let n = match a.n.or_else(|| strand_count_hint(&a.character)) {
        Some(n) => n,
        None => bail!(
            "cannot infer the strand count from `{}`; pass --n",
            a.character
        ),
    };
    let chi: ExactCharacter = parse_character(&a.character, n)?;
    let options = ClassifyOptions {
        k_values: a.k.as_deref().map(|k| parse_list(k, "k")).transpose()?,
        sigma_subset: a.sigma.as_deref().map(|s| parse_perms(s, n)).transpose()?,
        max_degree: a.max_degree,
        jobs,
    };
    let report = classify_links(&chi, &options)?;
    let mut json = serde_json::to_value(&report)?;
    let obj = json.as_object_mut().expect("object");
    obj.insert(
        "one_positive".into(),
        serde_json::to_value(one_positive_pair(&chi))?,
    );
    if a.summary {
        obj.remove("cells");
    }

    let mut text = String::new();
    writeln!(
        text,
        "character: {} (n = {n}, {} cells)",
        report.character,
        report.cells.len()
    )?;
    writeln!(text, "{:<24} {:>7}  representative", "profile", "cells")?;
    for class in &report.profiles {
        writeln!(
            text,
            "{:<24} {:>7}  sigma={} k={}",
            class.label, class.count, class.representative.sigma, class.representative.k
        )?;
    }
    if !a.summary {
        writeln!(text)?;
        for cell in &report.cells {
            writeln!(
                text,
                "{:<16} k={:<3} {:>4} vertices  {}",
                cell.sigma.to_string(),
                cell.k,
                cell.vertex_count,
                cell.profile.profile.label()
            )?;
        }
    }
    Ok(Report { json, text })
}

pub fn chi(a: &ChiArgs) -> Result<Report> {
    let c: ExactCharacter = chi_m_n(a.m, a.n)?;
    let op = one_positive_pair(&c);
    let json = json!({
        "m": a.m,
        "character": c,
        "one_positive": op,
    });
    let mut text = format!(
        "chi({},{}) = {c}\nchi(Delta) = {}",
        a.m,
        a.n,
        c.delta_value()
    );
    if let Some(op) = op {
        let sign = if op.antipode { "negative" } else { "positive" };
        write!(
            text,
            "\nlone {sign} coefficient on w[{},{}]",
            op.pair.0, op.pair.1
        )?;
    }
    Ok(Report { json, text })
}
