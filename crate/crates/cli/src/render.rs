use std::fmt::Write;

use bggchar_core::*;

pub fn character(ch: &Character) -> String {
    let rd = ch.root_datum();
    let win = ch.window();
    let mut out = String::new();
    let status = if ch.is_exact() { "exact" } else { "truncated" };
    writeln!(out, "{} character, top {} depth {}, {status}", rd.label(), win.top, win.depth).unwrap();
    let mut terms: Vec<_> = ch.terms().iter().collect();
    terms.sort_by_key(|(w, _)| {
        let h: i64 = rd.scaled_root_coords(&(&win.top - *w)).iter().sum();
        (h, std::cmp::Reverse((*w).clone()))
    });
    for (w, m) in terms {
        writeln!(out, "  {w}: {m}").unwrap();
    }
    if ch.is_exact() {
        writeln!(out, "dimension: {}", ch.dimension()).unwrap();
    }
    out
}

pub fn witness(w: &LinkageWitness) -> String {
    let mut out = String::new();
    let verdict = if w.linked { "linked" } else { "not linked" };
    writeln!(out, "{} ↑ {} (modulus {}): {verdict}", w.mu, w.lambda, w.modulus).unwrap();
    for step in &w.chain {
        let beta: Vec<String> = step.reflection.beta.0.iter().map(i64::to_string).collect();
        writeln!(
            out,
            "  {} → {} via s[β=({}), m={}]",
            step.from,
            step.to,
            beta.join(","),
            step.reflection.m
        )
        .unwrap();
    }
    out
}

pub fn ledger(l: &CompositionLedger) -> String {
    let mut out = String::new();
    writeln!(out, "Δ({}) at {}, weights above {}", l.n, l.regime, l.cutoff).unwrap();
    for (f, m) in l.factors.iter().rev() {
        writeln!(out, "  L({f}) × {m}").unwrap();
    }
    if l.remainder.is_empty() {
        writeln!(out, "remainder: none").unwrap();
    } else {
        writeln!(out, "remainder:").unwrap();
        for item in &l.remainder {
            let q = item.quotient;
            let peeled = if item.head_peeled { " (head listed above)" } else { "" };
            writeln!(
                out,
                "  L({}) ⊗ Δ({})^({}){peeled}",
                q.restricted_part, q.verma_part, q.twist
            )
            .unwrap();
        }
    }
    out
}

pub fn reciprocity(o: &ReciprocityOutcome) -> String {
    format!(
        "λ = {}, μ = {}, r = {}: (T(λ) : Δ(μ)) = {}, [Δ̃(μ) : L(−λ−2)] = {}, {}\n",
        o.lambda,
        o.mu,
        o.r,
        o.lhs,
        o.rhs,
        if o.equal { "equal" } else { "DIFFERENT" }
    )
}
