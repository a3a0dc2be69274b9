use singspec_core::{milnor_number, spectrum_newton, tjurina_number, Polynomial, SpectrumOptions};

fn main() {
    let cases: &[(&str, usize, &str)] = &[
        ("Q_10", 3, "x^3+y^4+y*z^2"),
        ("Q_11", 3, "x^3+y^2*z+x*z^3"),
        ("Q_12", 3, "x^3+y^5+y*z^2"),
        ("S_11", 3, "x^4+y^2*z+x*z^2"),
        ("S_12", 3, "x^2*y+y^2*z+x*z^3"),
        ("U_12", 3, "x^3+y^3+z^4"),
        ("Z_11", 2, "x^3*y+y^5"),
        ("Z_12", 2, "x^3*y+x*y^4"),
        ("Z_13", 2, "x^3*y+y^6"),
        ("W_13", 2, "x^4+x*y^4"),
        ("E_12", 2, "x^3+y^7"),
        ("E_13", 2, "x^3+x*y^5"),
        ("E_14", 2, "x^3+y^8"),
        ("J_3_0", 2, "x^3+x^2*y^3+y^9"),
        ("W_1_0", 2, "x^4+y^6"),
        ("Q_2_0", 3, "x^3+y*z^2+y^6"),
        ("Z_1_0", 2, "x^3*y+y^7"),
        ("S_1_0", 3, "x^2*z+y*z^2+y^5"),
        ("U_1_0", 3, "x^3+x*z^2+y^3*z"),
        ("E_18", 2, "x^3+y^10"),
        ("E_19", 2, "x^3+x*y^7"),
        ("E_20", 2, "x^3+y^11"),
        ("Z_17", 2, "x^3*y+y^8"),
        ("Z_18", 2, "x^3*y+x*y^6"),
        ("Z_19", 2, "x^3*y+y^9"),
        ("W_17", 2, "x^4+x*y^5"),
        ("W_18", 2, "x^4+y^7"),
        ("Q_16", 3, "x^3+y*z^2+y^7"),
        ("Q_17", 3, "x^3+y*z^2+x*y^5"),
        ("Q_18", 3, "x^3+y*z^2+y^8"),
        ("S_16", 3, "x^2*z+y*z^2+x*y^4"),
        ("S_17", 3, "x^2*z+y*z^2+y^6"),
        ("U_16", 3, "x^3+x*z^2+y^5"),
        ("J_3_p2", 2, "x^3+x^2*y^3+y^11"),
        ("J_3_p4", 2, "x^3+x^2*y^3+y^13"),
        ("Z_1_p2", 2, "x^3*y+x^2*y^3+y^9"),
        ("Z_1_p4", 2, "x^3*y+x^2*y^3+y^11"),
        ("W_1_p2", 2, "x^4+x^2*y^3+y^8"),
        ("W_1_p4", 2, "x^4+x^2*y^3+y^10"),
        ("Q_2_p2", 3, "x^3+y*z^2+x^2*y^2+y^8"),
        ("Q_2_p4", 3, "x^3+y*z^2+x^2*y^2+y^10"),
        ("S_1_p2", 3, "x^2*z+y*z^2+x^2*y^2+y^7"),
        ("S_1_p4", 3, "x^2*z+y*z^2+x^2*y^2+y^9"),
        ("J_3_p6", 2, "x^3+x^2*y^3+y^15"),
        ("J_3_p8", 2, "x^3+x^2*y^3+y^17"),
        ("J_3_p10", 2, "x^3+x^2*y^3+y^19"),
        ("Z_1_p6", 2, "x^3*y+x^2*y^3+y^13"),
        ("Z_1_p8", 2, "x^3*y+x^2*y^3+y^15"),
        ("Z_1_p10", 2, "x^3*y+x^2*y^3+y^17"),
        ("W_1_p6", 2, "x^4+x^2*y^3+y^12"),
        ("W_1_p8", 2, "x^4+x^2*y^3+y^14"),
        ("W_1_p10", 2, "x^4+x^2*y^3+y^16"),
        ("Q_2_p6", 3, "x^3+y*z^2+x^2*y^2+y^12"),
        ("Q_2_p8", 3, "x^3+y*z^2+x^2*y^2+y^14"),
        ("Q_2_p10", 3, "x^3+y*z^2+x^2*y^2+y^16"),
        ("S_1_p6", 3, "x^2*z+y*z^2+x^2*y^2+y^11"),
        ("S_1_p8", 3, "x^2*z+y*z^2+x^2*y^2+y^13"),
        ("S_1_p10", 3, "x^2*z+y*z^2+x^2*y^2+y^15"),
        ("T_3_3_4", 3, "x^4+y^3+z^3+x*y*z"),
        ("T_2_3_7", 3, "x^7+y^3+z^2+x*y*z"),
    ];
    let opts = SpectrumOptions::default();
    for (name, nvars, text) in cases {
        let f = Polynomial::parse(text, *nvars).unwrap();
        let mu = match milnor_number(&f, &opts.std) {
            Ok(m) => m,
            Err(e) => {
                eprintln!("{name};ERR mu: {e}");
                continue;
            }
        };
        let tau = match tjurina_number(&f, &opts.std) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("{name};ERR tau: {e}");
                continue;
            }
        };
        match spectrum_newton(&f, &opts) {
            Ok(sp) => {
                let joined: Vec<String> =
                    sp.exponents().iter().map(|a| a.to_string()).collect();
                eprintln!("{name};{mu};{tau};{}", joined.join(","));
            }
            Err(e) => eprintln!("{name};{mu};{tau};ERR spectrum: {e}"),
        }
    }
}
