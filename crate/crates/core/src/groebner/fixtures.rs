//! The three worked parameterizations over `Z/32003`, as printed.

use super::binary::BinaryForm;
use super::field::PrimeField;
use super::syzygy::{parse_relation, Relation};
use super::GroebnerError;

pub const AUX1_FORMS: [&str; 5] = [
    "t^10+t^9*u+t*u^9+u^10",
    "7*t^10+101*t^8*u^2+ 355*t^5*u^5+ 999*u^10",
    "29*t^10+ 99*t^3*u^7+ 67*t^2*u^8+ 83*u^10",
    "61*t^10+79*t^5*u^5+t^3*u^7+901*t*u^9+ 53*u^10",
    "741*t^10+t^8*u^2+ t^7*u^3+ t^6*u^4+ t^4*u^6+ t^2*u^8+ 9001*u^10",
];

/// First relation as printed; it names `f_5` where only `f_0..f_4` exist.
pub const AUX2_PRINTED_FIRST_RELATION: &str = "t^4 f_0 + t^3u f_1+ t^2u^2 f_2+ tu^3 f_3+ u^4 f_5=0";

pub const AUX2_RELATIONS: [&str; 4] = [
    "t^4 f_0 + t^3u f_1+ t^2u^2 f_2+ tu^3 f_3+ u^4 f_4=0",
    "u^3f_0+ u^2t f_1+ ut^2 f_3+ t^3 f_4=0",
    "ut f_1+ (u^2-t^2) f_2+ t^2 f_3+ u^2 f_4=0",
    "t^2 f_0+ (t^2+tu+u^2) f_1+ tu f_2+ u^2 f_3+ (t^2-u^2) f_4=0",
];

pub const AUX2_FORMS: [&str; 5] = [
    "-t^9u^2- t^8u^3+ t^6u^5+ 2t^5u^6- 2t^3u^8+ tu^10",
    "-t^8u^3+ 2t^7u^4- 3t^6u^5- t^5u^6+ 2t^4u^7+ 3t^3u^8+ t^2u^9- tu^10- u^11",
    "t^11+t^9u^2- 2t^8u^3+ 2t^7u^4- t^6u^5- 3t^4u^7- t^3u^8+ t^2u^9+ 2tu^10",
    "t^11- t^8u^3+ 2t^7u^4- t^6u^5- t^4u^7- 3t^3u^8- 2t^2u^9+ tu^10+ u^11",
    "-t^10u+ t^7u^4+ 3t^4u^7+ t^3u^8- t^2u^9- tu^10",
];

pub const AUX2_INITIAL: &str = "Borel(x2^4, x1*x2^2*x3, x0^3)";
pub const AUX2_SYZYGY_DEGREES: [u32; 4] = [13, 13, 14, 15];
pub const AUX2_SPLITTING: [i64; 4] = [4, 3, 2, 2];

pub const AUX3_RELATIONS: [&str; 4] = [
    "t^4f_0+t^3uf_1+t^2u^2 f_2+tu^3f_3+u^4f_4=0",
    "u^4f_0+u^3tf_1+(t^4+u^2t^2)f_2+ ut^3f_3+t^4f_4=0",
    "utf_1+(u^2-t^2)f_2+t^2f_3+u^2f_4=0",
    "tf_0+(t+u)f_2+(t-u)f_3+uf_4=0",
];

pub const AUX3_FORMS: [&str; 5] = [
    "2t^10u-t^9u^2-4t^7u^4-t^6u^5+2t^5u^6-t^4u^7+3t^3u^8+t^2u^9-tu^10",
    "-2t^11+t^10u+2t^9u^2+3t^8u^3-2t^7u^4-t^6u^5-t^5u^6+t^4u^7+2t^3u^8-2t^2u^9-tu^10+u^11",
    "-2t^10u+t^9u^2+t^8u^3+t^7u^4+t^6u^5-t^5u^6-tu^10",
    "-t^8u^3-2t^7u^4-t^6u^5+t^5u^6+4t^4u^7+t^3u^8-2t^2u^9-tu^10",
    "2t^10u-t^9u^2+3t^8u^3-2t^7u^4-4t^6u^5-t^5u^6+2t^3u^8+t^2u^9",
];

pub const AUX3_INITIAL: &str = "x0^2*x2, x0^3, x0*x1^2*x2, x0^2*x3^3, x2^3*x3, x1*x2^2*x3, x0*x2^2*x3, x1^2*x2*x3, \
x0*x1*x2*x3, x0*x1^2*x3, x0^2*x1*x3, x2^4, x1*x2^3, x0*x2^3, x1^2*x2^2, x0*x1*x2^2, x1^3*x2, x0*x1^3, x0^2*x1^2, \
x0*x1*x3^3, x1^3*x3^3";
pub const AUX3_SYZYGY_DEGREES: [u32; 4] = [12, 13, 15, 15];
pub const AUX3_SPLITTING: [i64; 4] = [4, 4, 2, 1];
pub const AUX3_GENUS: i64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    Aux1,
    Aux2,
    Aux3,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::Aux1, Fixture::Aux2, Fixture::Aux3];

    pub fn name(&self) -> &'static str {
        match self {
            Fixture::Aux1 => "aux1",
            Fixture::Aux2 => "aux2",
            Fixture::Aux3 => "aux3",
        }
    }

    pub fn from_name(s: &str) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn form_texts(&self) -> &'static [&'static str; 5] {
        match self {
            Fixture::Aux1 => &AUX1_FORMS,
            Fixture::Aux2 => &AUX2_FORMS,
            Fixture::Aux3 => &AUX3_FORMS,
        }
    }

    pub fn forms(&self, field: PrimeField) -> Result<Vec<BinaryForm>, GroebnerError> {
        self.form_texts().iter().map(|s| BinaryForm::parse(s, field)).collect()
    }

    /// Relation systems; `aux1` has none.
    pub fn relations(&self, field: PrimeField) -> Result<Vec<Relation>, GroebnerError> {
        let texts: &[&str] = match self {
            Fixture::Aux1 => &[],
            Fixture::Aux2 => &AUX2_RELATIONS,
            Fixture::Aux3 => &AUX3_RELATIONS,
        };
        texts.iter().map(|s| parse_relation(s, field)).collect()
    }
}
