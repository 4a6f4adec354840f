//! Published corner numbers of the 30 cubes, one row per cube in tableau
//! reading order (Ab, Ac, ..., Fe). Each entry is already the least cyclic
//! rotation. The tableau is rebuilt from face colorings at startup and must
//! reproduce these rows exactly.

pub const CORNER_TABLE: [(&str, [u16; 8]); 30] = [
    ("Ab", [143, 345, 235, 132, 126, 256, 465, 164]),
    ("Ac", [153, 134, 142, 125, 265, 246, 364, 356]),
    ("Ad", [243, 123, 152, 254, 456, 165, 136, 346]),
    ("Ae", [354, 145, 124, 234, 263, 162, 156, 365]),
    ("Af", [245, 154, 135, 253, 236, 163, 146, 264]),
    ("Ba", [123, 253, 354, 134, 146, 456, 265, 162]),
    ("Bc", [143, 154, 245, 234, 263, 256, 165, 136]),
    ("Bd", [153, 132, 124, 145, 465, 264, 236, 356]),
    ("Be", [152, 135, 345, 254, 246, 364, 163, 126]),
    ("Bf", [243, 235, 125, 142, 164, 156, 365, 346]),
    ("Ca", [152, 124, 143, 135, 365, 346, 264, 256]),
    ("Cb", [243, 254, 145, 134, 163, 156, 265, 236]),
    ("Cd", [235, 345, 154, 125, 162, 146, 364, 263]),
    ("Ce", [245, 253, 123, 142, 164, 136, 356, 465]),
    ("Cf", [153, 354, 234, 132, 126, 246, 456, 165]),
    ("Da", [245, 125, 132, 234, 364, 163, 156, 465]),
    ("Db", [154, 142, 123, 135, 365, 263, 246, 456]),
    ("Dc", [152, 145, 354, 253, 236, 346, 164, 126]),
    ("De", [153, 235, 243, 134, 146, 264, 256, 165]),
    ("Df", [143, 124, 254, 345, 356, 265, 162, 136]),
    ("Ea", [243, 142, 154, 345, 356, 165, 126, 236]),
    ("Eb", [245, 354, 153, 125, 162, 136, 346, 264]),
    ("Ec", [124, 132, 235, 254, 456, 365, 163, 146]),
    ("Ed", [143, 234, 253, 135, 156, 265, 246, 164]),
    ("Ef", [152, 123, 134, 145, 465, 364, 263, 256]),
    ("Fa", [235, 153, 145, 254, 246, 164, 136, 263]),
    ("Fb", [124, 152, 253, 234, 364, 356, 165, 146]),
    ("Fc", [123, 243, 345, 135, 156, 465, 264, 162]),
    ("Fd", [354, 245, 142, 134, 163, 126, 256, 365]),
    ("Fe", [154, 143, 132, 125, 265, 236, 346, 456]),
];
