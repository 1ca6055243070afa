use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use igq_core::algebra::write_ideal;
use igq_core::presentations::{build_presentation, PresentationSpec, QMode, Variant};

/// File stem for a presentation, e.g. `ig2-6-quantum_ii-q1`.
pub fn file_stem(spec: &PresentationSpec) -> String {
    let q = match (spec.variant.is_quantum(), spec.q_mode) {
        (false, _) => "",
        (true, QMode::Specialize1) => "-q1",
        (true, QMode::Symbolic) => "-qsym",
    };
    format!("ig2-{}-{}{q}", 2 * spec.n, spec.variant.name().to_lowercase())
}

/// Presentation generators and their reduced Gröbner basis, each with the
/// `# IG(2,2n) ...` and `# ring: ...` header lines.
pub fn render(spec: &PresentationSpec) -> Result<(String, String), igq_core::Error> {
    let ideal = build_presentation(spec)?;
    let ring = ideal.ring();
    let header = |what: &str| format!("# {}\n# ring: {} order={:?}\n# {what}\n", spec.label(), ring.names().join(","), ring.order());
    let gens = header("generators") + &write_ideal(ideal.generators());
    let gb = header("reduced groebner basis") + &write_ideal(ideal.groebner().elements());
    Ok((gens, gb))
}

/// Writes all four presentations for `n` into `dir`; returns the paths.
pub fn dump_presentations(dir: &Path, n: usize, q_mode: QMode) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for variant in Variant::ALL {
        let spec = PresentationSpec::new(n, variant, q_mode).map_err(io::Error::other)?;
        let (gens, gb) = render(&spec).map_err(io::Error::other)?;
        let stem = file_stem(&spec);
        for (suffix, body) in [("txt", gens), ("gb.txt", gb)] {
            let path = dir.join(format!("{stem}.{suffix}"));
            fs::write(&path, body)?;
            written.push(path);
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use igq_core::algebra::parse_ideal;
    use igq_core::algebra::Ideal;

    #[test]
    fn round_trip() {
        let spec = PresentationSpec::new(3, Variant::QuantumII, QMode::Specialize1).unwrap();
        let (gens, gb) = render(&spec).unwrap();
        assert!(gens.starts_with("# IG(2,6) variant=QUANTUM_II q=1\n# ring: a1,a2,b1 order=Grevlex\n"));
        let ring = spec.ring();
        let parsed = Ideal::new(&ring, parse_ideal(&ring, &gens).unwrap()).unwrap();
        let basis = Ideal::new(&ring, parse_ideal(&ring, &gb).unwrap()).unwrap();
        assert!(parsed.same_ideal(&basis));
        assert!(parsed.same_ideal(&build_presentation(&spec).unwrap()));
        assert_eq!(file_stem(&spec), "ig2-6-quantum_ii-q1");
    }
}
