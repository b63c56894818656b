//! The nine reference Gram matrices of the dihedral cases; the
//! verification harness rebuilds each case's ordered basis and compares
//! against these with exact integer equality.

pub const DIH4_14_GRAM: [[i32; 14]; 14] = [
    [4, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0, 1],
    [0, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -2, 4, -2, -2, 2, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, -2, 4, 0, -2, 0, 0, 0, 0, 0],
    [-2, 0, 0, 0, 0, -2, 0, 4, -2, 0, 0, 0, 0, -2],
    [1, 0, 0, 0, 0, 2, -2, -2, 4, -2, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, 0],
    [1, 0, 0, 0, 0, 1, 0, -2, 0, 0, 0, 0, 0, 4],
];

pub const DIH4_12_GRAM: [[i32; 12]; 12] = [
    [4, 0, 2, 0, 0, 0, 0, -2, 0, 0, 0, -2],
    [0, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -2, 4, -2, 0, 0, 0, -2, 0, 0, 0],
    [0, 0, 0, -2, 4, -2, 0, 0, 2, 0, 0, -1],
    [0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0],
    [-2, 0, 0, 0, 0, 0, 0, 4, -1, 0, 0, 2],
    [0, 0, 0, -2, 2, 0, 0, -1, 4, -2, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, 0],
    [-2, 0, 0, 0, -1, 0, 0, 2, 0, 0, 0, 4],
];

pub const DIH6_16_GRAM: [[i32; 16]; 16] = [
    [4, -2, 0, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0],
    [-2, 4, -2, 0, 0, 0, -2, 0, -1, 2, -1, 0, 0, 0, -1, 0],
    [0, -2, 4, -2, 0, 0, 0, 0, 0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -2, 4, -2, 0, 0, 0, 0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, -1, 2, 0, 0],
    [0, -2, 0, 0, 0, 0, 4, -2, 0, -1, 0, 0, 0, 0, 2, -1],
    [0, 0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, -1, 2],
    [2, -1, 0, 0, 0, 0, 0, 0, 4, -2, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, -1, 0, -2, 4, -2, 0, 0, 0, -2, 0],
    [0, -1, 2, -1, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0],
    [0, 0, 0, 0, -1, 2, 0, 0, 0, 0, 0, 0, -2, 4, 0, 0],
    [0, -1, 0, 0, 0, 0, 2, -1, 0, -2, 0, 0, 0, 0, 4, -2],
    [0, 0, 0, 0, 0, 0, -1, 2, 0, 0, 0, 0, 0, 0, -2, 4],
];

pub const DIH6_14_GRAM: [[i32; 14]; 14] = [
    [4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-2, 4, -2, 0, 0, 0, -2, 0, -2, 0, 0, 0, 2, 0],
    [0, -2, 4, -2, 0, 0, 0, 0, 0, 1, 0, 0, -2, 0],
    [0, 0, -2, 4, -2, 0, 0, 0, 1, -2, 1, 0, 0, 0],
    [0, 0, 0, -2, 4, -2, 0, 0, 0, 1, -2, 1, 0, 0],
    [0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 1, -2, 0, 0],
    [0, -2, 0, 0, 0, 0, 4, -2, 2, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, -1, -2],
    [0, -2, 0, 1, 0, 0, 2, 0, 4, -2, 0, 0, 0, 0],
    [0, 0, 1, -2, 1, 0, 0, 0, -2, 4, -2, 0, 0, 0],
    [0, 0, 0, 1, -2, 1, 0, 0, 0, -2, 4, -2, 0, 0],
    [0, 0, 0, 0, 1, -2, 0, 0, 0, 0, -2, 4, 0, 0],
    [0, 2, -2, 0, 0, 0, 0, -1, 0, 0, 0, 0, 4, 2],
    [0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 2, 4],
];

pub const DIH8_16_0_GRAM: [[i32; 16]; 16] = [
    [4, 0, -2, 0, 0, 0, 0, -2, 1, -2, 2, 0, 0, 0, 0, 0],
    [0, 4, -2, 0, 0, 0, 0, 0, 1, -2, -2, 2, 0, 0, 0, 0],
    [-2, -2, 4, -2, 0, 0, 0, 0, -1, 2, 0, -2, 2, -1, 0, 0],
    [0, 0, -2, 4, -2, 0, 0, 0, 1, 0, 0, 0, -2, 2, 0, 0],
    [0, 0, 0, -2, 4, -2, 0, 0, -1, 0, 0, 1, 0, -2, 2, -1],
    [0, 0, 0, 0, -2, 4, -2, 0, 1, 0, 0, 0, 0, 0, -2, 2],
    [0, 0, 0, 0, 0, -2, 4, 0, -1, 0, 0, 0, 0, 1, 0, -2],
    [-2, 0, 0, 0, 0, 0, 0, 4, -2, 1, -1, 1, -1, 1, -1, 1],
    [1, 1, -1, 1, -1, 1, -1, -2, 4, -2, 0, 0, 0, 0, 0, 0],
    [-2, -2, 2, 0, 0, 0, 0, 1, -2, 4, 0, -2, 0, 0, 0, 0],
    [2, -2, 0, 0, 0, 0, 0, -1, 0, 0, 4, -2, 0, 0, 0, 0],
    [0, 2, -2, 0, 1, 0, 0, 1, 0, -2, -2, 4, -2, 0, 0, 0],
    [0, 0, 2, -2, 0, 0, 0, -1, 0, 0, 0, -2, 4, -2, 0, 0],
    [0, 0, -1, 2, -2, 0, 1, 1, 0, 0, 0, 0, -2, 4, -2, 0],
    [0, 0, 0, 0, 2, -2, 0, -1, 0, 0, 0, 0, 0, -2, 4, -2],
    [0, 0, 0, 0, -1, 2, -2, 1, 0, 0, 0, 0, 0, 0, -2, 4],
];

pub const DIH8_16_DD4_GRAM: [[i32; 16]; 16] = [
    [4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, -2, 0, 0, -1],
    [-2, 4, -2, 0, 0, 0, 2, 0, 0, 0, 0, -1, 0, 1, 0, 0],
    [0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 2, -2, 0, 1],
    [0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, -1],
    [0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 2, -2, 1],
    [0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1],
    [0, 2, 0, 0, 0, 0, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 4, -2, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0],
    [2, -1, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0],
    [-2, 0, 2, -1, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 2],
    [0, 1, -2, 0, 2, -1, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0],
    [0, 0, 0, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, 0],
    [-1, 0, 1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 4],
];

pub const DIH8_15_GRAM: [[i32; 15]; 15] = [
    [4, -2, 0, 0, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0],
    [-2, 4, -2, 0, 0, 0, 0, 0, -2, -2, 0, 0, 0, 0, 0],
    [0, -2, 4, -2, 0, 0, 0, -2, 2, 2, -1, 0, 0, 0, -1],
    [0, 0, -2, 4, -2, 0, 0, 0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -2, 4, -2, 0, 0, 0, -1, 1, 1, -1, 0],
    [0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -2, 0, 0, 0, 0, 4, -1, -1, 0, 1, -1, 1, 2],
    [0, -2, 2, 0, 0, 0, 0, -1, 4, 0, 0, 0, 0, 0, 0],
    [2, -2, 2, -1, 0, 0, 0, -1, 0, 4, -2, 0, 0, 0, -2],
    [-1, 0, -1, 2, 0, -1, 0, 0, 0, -2, 4, -2, 0, 0, 0],
    [0, 0, 0, -1, 0, 1, 0, 1, 0, 0, -2, 4, -2, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, -2, 4, -2, 0],
    [0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, -2, 4, 0],
    [0, 0, -1, 0, 0, 0, 0, 2, 0, -2, 0, 0, 0, 0, 4],
];

pub const DIH10_16_GRAM: [[i32; 16]; 16] = [
    [4, -2, 0, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0],
    [-2, 4, -2, 0, 0, 0, 0, 0, 0, -1, 1, -1, 1, -1, 1, 0],
    [0, -2, 4, -2, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0],
    [0, 0, -2, 4, -2, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, -1],
    [0, 0, 0, -2, 4, -2, 0, -2, 0, 0, 0, 1, -2, 1, 0, 1],
    [0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 1, -2, 1, -1, 0, 1],
    [0, 0, 0, 0, 0, -2, 4, 0, 0, 1, -2, 2, 0, -1, 0, 0],
    [0, 0, 0, 0, -2, 0, 0, 4, -1, 1, 0, -1, 2, -1, 1, -2],
    [2, 0, 0, 0, 0, 0, 0, -1, 4, -2, 0, 0, 0, 0, 0, 0],
    [-1, -1, 1, -1, 0, 0, 1, 1, -2, 4, -2, 0, 0, 0, 0, 0],
    [0, 1, -2, 1, 0, 1, -2, 0, 0, -2, 4, -2, 0, 0, 0, 0],
    [0, -1, 1, 0, 1, -2, 2, -1, 0, 0, -2, 4, -2, 0, 0, 0],
    [0, 1, 0, 0, -2, 1, 0, 2, 0, 0, 0, -2, 4, -2, 0, -2],
    [0, -1, 0, 1, 1, -1, -1, -1, 0, 0, 0, 0, -2, 4, -2, 0],
    [0, 1, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, -2, 4, 0],
    [0, 0, 0, -1, 1, 1, 0, -2, 0, 0, 0, 0, -2, 0, 0, 4],
];

pub const DIH12_16_GRAM: [[i32; 16]; 16] = [
    [4, -2, 0, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0],
    [-2, 4, -2, 0, 0, 0, 0, 0, -1, 0, 1, -1, 1, 0, 0, -1],
    [0, -2, 4, -2, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0],
    [0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 1],
    [0, 0, 0, -2, 4, -2, 0, -2, 0, 0, 0, 0, 0, -1, 0, 1],
    [0, 0, 0, 0, -2, 4, -2, 0, 0, -1, 0, 1, -1, 2, -1, -1],
    [0, 0, 0, 0, 0, -2, 4, 0, 0, 1, 0, -1, 0, -1, 2, 1],
    [0, 0, 0, 0, -2, 0, 0, 4, 0, 0, 0, -1, 2, 0, 0, -2],
    [2, -1, 0, 0, 0, 0, 0, 0, 4, -2, 0, 0, 0, 0, 0, 0],
    [-1, 0, 1, 0, 0, -1, 1, 0, -2, 4, -2, 0, 0, 0, 0, 0],
    [0, 1, -2, 1, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 1, -1, -1, 0, 0, -2, 4, -2, 0, 0, 0],
    [0, 1, 0, -1, 0, -1, 0, 2, 0, 0, 0, -2, 4, -2, 0, -2],
    [0, 0, 0, 0, -1, 2, -1, 0, 0, 0, 0, 0, -2, 4, -2, 0],
    [0, 0, 0, 0, 0, -1, 2, 0, 0, 0, 0, 0, 0, -2, 4, 0],
    [0, -1, 0, 1, 1, -1, 1, -2, 0, 0, 0, 0, -2, 0, 0, 4],
];
