//! JSON and markdown renderings of the broken-phase term table.

use octoweak_core::field::{LagrangianTerm, TermTable};
use serde_json::{json, Value as Json};

fn term_json(t: &LagrangianTerm) -> Json {
    let (re, im) = t.coefficient.to_f64_pair();
    json!({
        "key": t.key(),
        "class": t.class.name(),
        "sector": t.sector.name(),
        "fields": t.fields,
        "lorentz": t.lorentz,
        "bilinear": t.bilinear.map(|b| b.to_string()),
        "coefficient": t.coefficient.render(),
        "coefficient_f64": [re, im],
        "scale": t.scale.render(),
        "claimed": t.claimed.as_ref().map(|c| c.render()),
        "approximate": t.approximate,
    })
}

/// Terms in canonical order: class, then field labels, then bilinear.
pub fn canonical(table: &TermTable) -> Vec<&LagrangianTerm> {
    let mut v: Vec<&LagrangianTerm> = table.terms.iter().collect();
    v.sort_by_key(|t| (t.class, t.key()));
    v
}

pub fn to_json(table: &TermTable) -> String {
    let items: Vec<Json> = canonical(table).into_iter().map(term_json).collect();
    let mut s = serde_json::to_string_pretty(&items).expect("term table serializes");
    s.push('\n');
    s
}

pub fn to_markdown(table: &TermTable) -> String {
    let mut out = String::from("| class | sector | fields | Lorentz | bilinear | coefficient | scale |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for t in canonical(table) {
        let bil = t.bilinear.map(|b| b.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            t.class.name(),
            t.sector.name(),
            t.fields.join(" "),
            t.lorentz,
            bil,
            t.coefficient.render().replace('|', "\\|"),
            t.scale.render()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use octoweak_core::couplings::{coupling_match, Couplings};
    use octoweak_core::field::{lagrangian_terms, FieldParams};

    fn table() -> TermTable {
        lagrangian_terms(&coupling_match(&Couplings::default()), &FieldParams::default()).unwrap()
    }

    #[test]
    fn json_is_sorted_and_complete() {
        let t = table();
        let j: Vec<Json> = serde_json::from_str(&to_json(&t)).unwrap();
        assert_eq!(j.len(), t.terms.len());
        let keys: Vec<String> = canonical(&t).iter().map(|x| x.key()).collect();
        let got: Vec<String> = j.iter().map(|x| x["key"].as_str().unwrap().to_string()).collect();
        assert_eq!(keys, got);
    }

    #[test]
    fn markdown_has_a_row_per_term() {
        let t = table();
        assert_eq!(to_markdown(&t).lines().count(), t.terms.len() + 2);
    }
}
