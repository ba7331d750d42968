//! Built-in Seifert matrices with their known `∇`.

use nabla_core::alexander::nabla_from_seifert;
use nabla_core::rational::int;
use nabla_core::seifert::SeifertMatrix;
use nabla_core::ZPoly;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub seifert: SeifertMatrix,
    pub components: usize,
    pub expected_nabla: ZPoly,
}

fn fixture(
    name: &str,
    rows: &[&[i64]],
    components: usize,
    prefactor: u32,
    nabla: &[i64],
) -> Fixture {
    Fixture {
        name: name.into(),
        seifert: SeifertMatrix::from_ints(rows),
        components,
        expected_nabla: ZPoly::new(prefactor, nabla.iter().map(|&c| int(c)).collect()),
    }
}

fn table() -> Vec<Fixture> {
    let mut out = vec![
        fixture("unknot", &[], 1, 0, &[1]),
        fixture("trefoil", &[&[-1, 1], &[0, -1]], 1, 0, &[1, 1]),
        fixture("figure-eight", &[&[1, 1], &[0, -1]], 1, 0, &[1, -1]),
    ];
    for n in 0..=5 {
        out.push(fixture(
            &format!("twist-{n}"),
            &[&[-1, 1], &[0, n]],
            1,
            0,
            &[1, -n],
        ));
    }
    for k in [-2, -1, 1, 2] {
        out.push(fixture(&format!("annulus{k:+}"), &[&[k]], 2, 1, &[k]));
    }
    out
}

impl Fixture {
    pub fn check(&self) -> Result<(), CliError> {
        let got = nabla_from_seifert(&self.seifert, self.components)?.z_form;
        if got != self.expected_nabla {
            return Err(CliError::Mismatch(format!(
                "fixture {}: expected {}, computed {got}",
                self.name, self.expected_nabla
            )));
        }
        Ok(())
    }
}

/// All fixtures, each verified against `nabla_from_seifert`.
pub fn load() -> Result<Vec<Fixture>, CliError> {
    let all = table();
    for f in &all {
        f.check()?;
    }
    Ok(all)
}

pub fn find(name: &str) -> Option<Fixture> {
    table().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_fixtures_check() {
        assert_eq!(super::load().unwrap().len(), 13);
    }
}
