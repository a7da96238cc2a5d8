//! Named classes of the degree-31 group, bound to their cycle types. The
//! names resolve by cycle type only; finer class distinctions (rationality
//! of the order-21 classes, say) are out of reach of this datum and never
//! claimed.

use super::perm::Perm;
use crate::algebra::profile::Profile;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassLabel {
    C2A,
    C3B,
    C8A,
    C21A,
}

impl ClassLabel {
    pub fn name(&self) -> &'static str {
        match self {
            ClassLabel::C2A => "2A",
            ClassLabel::C3B => "3B",
            ClassLabel::C8A => "8A",
            ClassLabel::C21A => "21A",
        }
    }

    pub fn cycle_type(&self) -> Profile {
        let parts: &[usize] = match self {
            ClassLabel::C2A => &[2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            ClassLabel::C3B => &[3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 1],
            ClassLabel::C8A => &[8, 8, 4, 4, 4, 2, 1],
            ClassLabel::C21A => &[21, 7, 3],
        };
        Profile::from_parts(parts)
    }

    pub fn all() -> [ClassLabel; 4] {
        [
            ClassLabel::C2A,
            ClassLabel::C3B,
            ClassLabel::C8A,
            ClassLabel::C21A,
        ]
    }
}

/// The named class with g's cycle type, if any.
pub fn class_label(g: &Perm) -> Option<ClassLabel> {
    let t = g.cycle_type();
    ClassLabel::all().into_iter().find(|l| l.cycle_type() == t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(ClassLabel::C2A.cycle_type().to_string(), "2^8.1^15");
        assert_eq!(ClassLabel::C3B.cycle_type().to_string(), "3^10.1");
        assert_eq!(ClassLabel::C8A.cycle_type().to_string(), "8^2.4^3.2.1");
        assert_eq!(ClassLabel::C21A.cycle_type().to_string(), "21.7.3");
        for l in ClassLabel::all() {
            assert_eq!(l.cycle_type().total(), 31);
        }
    }

    #[test]
    fn identity_unnamed() {
        assert_eq!(class_label(&Perm::identity(31)), None);
    }
}
