//! Frozen reference data: tau-truncated spectra of the modality 1 and 2
//! normal forms together with the exact mean, squared deviation sum,
//! range, and inequality residual at each admissible truncation length.
//! Where `germ` is nonempty the full spectrum is independently
//! recomputable from that polynomial.

pub struct Branch {
    pub tau_max: usize,
    pub mean: &'static str,
    pub sum_sq: &'static str,
    pub range: &'static str,
    pub residual: &'static str,
}

pub struct RefCase {
    pub name: &'static str,
    pub nvars: usize,
    pub germ: &'static str,
    pub mu: usize,
    pub spectrum: &'static [&'static str],
    pub branches: &'static [Branch],
}

pub static MODALITY_LE_2: &[RefCase] = &[
    RefCase {
        name: "Q_10",
        nvars: 3,
        germ: "x^3+y^4+y*z^2",
        mu: 10,
        spectrum: &["23/24", "29/24", "31/24", "4/3", "35/24", "37/24", "5/3", "41/24", "43/24", "49/24"],
        branches: &[
            Branch {
                tau_max: 9,
                mean: "311/216",
                sum_sq: "1495/2592",
                range: "5/6",
                residual: "-125/2592",
            },
        ],
    },
    RefCase {
        name: "Q_11",
        nvars: 3,
        germ: "x^3+y^2*z+x*z^3",
        mu: 11,
        spectrum: &["17/18", "7/6", "23/18", "4/3", "25/18", "3/2", "29/18", "5/3", "31/18", "11/6", "37/18"],
        branches: &[
            Branch {
                tau_max: 10,
                mean: "13/9",
                sum_sq: "55/81",
                range: "8/9",
                residual: "-5/81",
            },
        ],
    },
    RefCase {
        name: "Q_12",
        nvars: 3,
        germ: "x^3+y^5+y*z^2",
        mu: 12,
        spectrum: &["14/15", "17/15", "19/15", "4/3", "4/3", "22/15", "23/15", "5/3", "5/3", "26/15", "28/15", "31/15"],
        branches: &[
            Branch {
                tau_max: 11,
                mean: "239/165",
                sum_sq: "646/825",
                range: "14/15",
                residual: "-359/4950",
            },
        ],
    },
    RefCase {
        name: "S_11",
        nvars: 3,
        germ: "x^4+y^2*z+x*z^2",
        mu: 11,
        spectrum: &["15/16", "19/16", "5/4", "21/16", "23/16", "3/2", "25/16", "27/16", "7/4", "29/16", "33/16"],
        branches: &[
            Branch {
                tau_max: 10,
                mean: "231/160",
                sum_sq: "1749/2560",
                range: "7/8",
                residual: "-353/7680",
            },
        ],
    },
    RefCase {
        name: "S_12",
        nvars: 3,
        germ: "x^2*y+y^2*z+x*z^3",
        mu: 12,
        spectrum: &["12/13", "15/13", "16/13", "17/13", "18/13", "19/13", "20/13", "21/13", "22/13", "23/13", "24/13", "27/13"],
        branches: &[
            Branch {
                tau_max: 11,
                mean: "207/143",
                sum_sq: "1470/1859",
                range: "12/13",
                residual: "-103/1859",
            },
        ],
    },
    RefCase {
        name: "U_12",
        nvars: 3,
        germ: "x^3+y^3+z^4",
        mu: 12,
        spectrum: &["11/12", "7/6", "5/4", "5/4", "17/12", "3/2", "3/2", "19/12", "7/4", "7/4", "11/6", "25/12"],
        branches: &[
            Branch {
                tau_max: 11,
                mean: "191/132",
                sum_sq: "35/44",
                range: "11/12",
                residual: "-71/1584",
            },
        ],
    },
    RefCase {
        name: "Z_11",
        nvars: 2,
        germ: "x^3*y+y^5",
        mu: 11,
        spectrum: &["7/15", "2/3", "11/15", "13/15", "14/15", "1/1", "16/15", "17/15", "19/15", "4/3", "23/15"],
        branches: &[
            Branch {
                tau_max: 10,
                mean: "71/75",
                sum_sq: "748/1125",
                range: "13/15",
                residual: "-43/750",
            },
        ],
    },
    RefCase {
        name: "Z_12",
        nvars: 2,
        germ: "x^3*y+x*y^4",
        mu: 12,
        spectrum: &["5/11", "7/11", "8/11", "9/11", "10/11", "1/1", "1/1", "12/11", "13/11", "14/11", "15/11", "17/11"],
        branches: &[
            Branch {
                tau_max: 11,
                mean: "115/121",
                sum_sq: "1020/1331",
                range: "10/11",
                residual: "-535/7986",
            },
        ],
    },
    RefCase {
        name: "Z_13",
        nvars: 2,
        germ: "x^3*y+y^6",
        mu: 13,
        spectrum: &["4/9", "11/18", "13/18", "7/9", "8/9", "17/18", "1/1", "19/18", "10/9", "11/9", "23/18", "25/18", "14/9"],
        branches: &[
            Branch {
                tau_max: 12,
                mean: "103/108",
                sum_sq: "845/972",
                range: "17/18",
                residual: "-73/972",
            },
        ],
    },
    RefCase {
        name: "W_13",
        nvars: 2,
        germ: "x^4+x*y^4",
        mu: 13,
        spectrum: &["7/16", "5/8", "11/16", "13/16", "7/8", "15/16", "1/1", "17/16", "9/8", "19/16", "21/16", "11/8", "25/16"],
        branches: &[
            Branch {
                tau_max: 12,
                mean: "61/64",
                sum_sq: "897/1024",
                range: "15/16",
                residual: "-63/1024",
            },
        ],
    },
    RefCase {
        name: "E_12",
        nvars: 2,
        germ: "x^3+y^7",
        mu: 12,
        spectrum: &["10/21", "13/21", "16/21", "17/21", "19/21", "20/21", "22/21", "23/21", "25/21", "26/21", "29/21", "32/21"],
        branches: &[
            Branch {
                tau_max: 11,
                mean: "20/21",
                sum_sq: "110/147",
                range: "19/21",
                residual: "-143/1764",
            },
        ],
    },
    RefCase {
        name: "E_13",
        nvars: 2,
        germ: "x^3+x*y^5",
        mu: 13,
        spectrum: &["7/15", "3/5", "11/15", "4/5", "13/15", "14/15", "1/1", "16/15", "17/15", "6/5", "19/15", "7/5", "23/15"],
        branches: &[
            Branch {
                tau_max: 12,
                mean: "43/45",
                sum_sq: "572/675",
                range: "14/15",
                residual: "-58/675",
            },
        ],
    },
    RefCase {
        name: "E_14",
        nvars: 2,
        germ: "x^3+y^8",
        mu: 14,
        spectrum: &["11/24", "7/12", "17/24", "19/24", "5/6", "11/12", "23/24", "25/24", "13/12", "7/6", "29/24", "31/24", "17/12", "37/24"],
        branches: &[
            Branch {
                tau_max: 13,
                mean: "23/24",
                sum_sq: "91/96",
                range: "23/24",
                residual: "-13/144",
            },
        ],
    },
    RefCase {
        name: "J_3_0",
        nvars: 2,
        germ: "x^3+x^2*y^3+y^9",
        mu: 16,
        spectrum: &["4/9", "5/9", "2/3", "7/9", "7/9", "8/9", "8/9", "1/1", "1/1", "10/9", "10/9", "11/9", "11/9", "4/3", "13/9", "14/9"],
        branches: &[
            Branch {
                tau_max: 15,
                mean: "26/27",
                sum_sq: "280/243",
                range: "1/1",
                residual: "-95/972",
            },
        ],
    },
    RefCase {
        name: "W_1_0",
        nvars: 2,
        germ: "x^4+y^6",
        mu: 15,
        spectrum: &["5/12", "7/12", "2/3", "3/4", "5/6", "11/12", "11/12", "1/1", "13/12", "13/12", "7/6", "5/4", "4/3", "17/12", "19/12"],
        branches: &[
            Branch {
                tau_max: 14,
                mean: "23/24",
                sum_sq: "35/32",
                range: "1/1",
                residual: "-7/96",
            },
        ],
    },
    RefCase {
        name: "Q_2_0",
        nvars: 3,
        germ: "x^3+y*z^2+y^6",
        mu: 14,
        spectrum: &["11/12", "13/12", "5/4", "5/4", "4/3", "17/12", "17/12", "19/12", "19/12", "5/3", "7/4", "7/4", "23/12", "25/12"],
        branches: &[
            Branch {
                tau_max: 13,
                mean: "227/156",
                sum_sq: "931/936",
                range: "1/1",
                residual: "-83/936",
            },
        ],
    },
    RefCase {
        name: "Z_1_0",
        nvars: 2,
        germ: "x^3*y+y^7",
        mu: 15,
        spectrum: &["3/7", "4/7", "5/7", "5/7", "6/7", "6/7", "1/1", "1/1", "1/1", "8/7", "8/7", "9/7", "9/7", "10/7", "11/7"],
        branches: &[
            Branch {
                tau_max: 14,
                mean: "47/49",
                sum_sq: "370/343",
                range: "1/1",
                residual: "-181/2058",
            },
        ],
    },
    RefCase {
        name: "S_1_0",
        nvars: 3,
        germ: "x^2*z+y*z^2+y^5",
        mu: 14,
        spectrum: &["9/10", "11/10", "6/5", "13/10", "13/10", "7/5", "3/2", "3/2", "8/5", "17/10", "17/10", "9/5", "19/10", "21/10"],
        branches: &[
            Branch {
                tau_max: 13,
                mean: "189/130",
                sum_sq: "329/325",
                range: "1/1",
                residual: "-277/3900",
            },
        ],
    },
    RefCase {
        name: "U_1_0",
        nvars: 3,
        germ: "x^3+x*z^2+y^3*z",
        mu: 14,
        spectrum: &["8/9", "10/9", "11/9", "11/9", "4/3", "13/9", "13/9", "14/9", "14/9", "5/3", "16/9", "16/9", "17/9", "19/9"],
        branches: &[
            Branch {
                tau_max: 13,
                mean: "170/117",
                sum_sq: "1078/1053",
                range: "1/1",
                residual: "-251/4212",
            },
        ],
    },
    RefCase {
        name: "E_18",
        nvars: 2,
        germ: "x^3+y^10",
        mu: 18,
        spectrum: &["13/30", "8/15", "19/30", "11/15", "23/30", "5/6", "13/15", "14/15", "29/30", "31/30", "16/15", "17/15", "7/6", "37/30", "19/15", "41/30", "22/15", "47/30"],
        branches: &[
            Branch {
                tau_max: 16,
                mean: "449/480",
                sum_sq: "1751/1600",
                range: "14/15",
                residual: "-2161/14400",
            },
            Branch {
                tau_max: 17,
                mean: "29/30",
                sum_sq: "34/25",
                range: "31/30",
                residual: "-187/1800",
            },
        ],
    },
    RefCase {
        name: "E_19",
        nvars: 2,
        germ: "x^3+x*y^7",
        mu: 19,
        spectrum: &["3/7", "11/21", "13/21", "5/7", "16/21", "17/21", "6/7", "19/21", "20/21", "1/1", "22/21", "23/21", "8/7", "25/21", "26/21", "9/7", "29/21", "31/21", "11/7"],
        branches: &[
            Branch {
                tau_max: 17,
                mean: "335/357",
                sum_sq: "2978/2499",
                range: "20/21",
                residual: "-1181/7497",
            },
            Branch {
                tau_max: 18,
                mean: "61/63",
                sum_sq: "646/441",
                range: "22/21",
                residual: "-47/441",
            },
        ],
    },
    RefCase {
        name: "E_20",
        nvars: 2,
        germ: "x^3+y^11",
        mu: 20,
        spectrum: &["14/33", "17/33", "20/33", "23/33", "25/33", "26/33", "28/33", "29/33", "31/33", "32/33", "34/33", "35/33", "37/33", "38/33", "40/33", "41/33", "43/33", "46/33", "49/33", "52/33"],
        branches: &[
            Branch {
                tau_max: 18,
                mean: "559/594",
                sum_sq: "209/162",
                range: "32/33",
                residual: "-293/1782",
            },
            Branch {
                tau_max: 19,
                mean: "32/33",
                sum_sq: "190/121",
                range: "35/33",
                residual: "-475/4356",
            },
        ],
    },
    RefCase {
        name: "Z_17",
        nvars: 2,
        germ: "x^3*y+y^8",
        mu: 17,
        spectrum: &["5/12", "13/24", "2/3", "17/24", "19/24", "5/6", "11/12", "23/24", "1/1", "25/24", "13/12", "7/6", "29/24", "31/24", "4/3", "35/24", "19/12"],
        branches: &[
            Branch {
                tau_max: 15,
                mean: "67/72",
                sum_sq: "445/432",
                range: "11/12",
                residual: "-25/216",
            },
            Branch {
                tau_max: 16,
                mean: "185/192",
                sum_sq: "2975/2304",
                range: "25/24",
                residual: "-25/256",
            },
        ],
    },
    RefCase {
        name: "Z_18",
        nvars: 2,
        germ: "x^3*y+x*y^6",
        mu: 18,
        spectrum: &["7/17", "9/17", "11/17", "12/17", "13/17", "14/17", "15/17", "16/17", "1/1", "1/1", "18/17", "19/17", "20/17", "21/17", "22/17", "23/17", "25/17", "27/17"],
        branches: &[
            Branch {
                tau_max: 16,
                mean: "127/136",
                sum_sq: "1303/1156",
                range: "16/17",
                residual: "-443/3468",
            },
            Branch {
                tau_max: 17,
                mean: "279/289",
                sum_sq: "6870/4913",
                range: "18/17",
                residual: "-999/9826",
            },
        ],
    },
    RefCase {
        name: "Z_19",
        nvars: 2,
        germ: "x^3*y+y^9",
        mu: 19,
        spectrum: &["11/27", "14/27", "17/27", "19/27", "20/27", "22/27", "23/27", "25/27", "26/27", "1/1", "28/27", "29/27", "31/27", "32/27", "34/27", "35/27", "37/27", "40/27", "43/27"],
        branches: &[
            Branch {
                tau_max: 17,
                mean: "430/459",
                sum_sq: "15190/12393",
                range: "26/27",
                residual: "-3433/24786",
            },
            Branch {
                tau_max: 18,
                mean: "235/243",
                sum_sq: "9880/6561",
                range: "29/27",
                residual: "-1381/13122",
            },
        ],
    },
    RefCase {
        name: "W_17",
        nvars: 2,
        germ: "x^4+x*y^5",
        mu: 17,
        spectrum: &["2/5", "11/20", "13/20", "7/10", "4/5", "17/20", "9/10", "19/20", "1/1", "21/20", "11/10", "23/20", "6/5", "13/10", "27/20", "29/20", "8/5"],
        branches: &[
            Branch {
                tau_max: 15,
                mean: "93/100",
                sum_sq: "133/125",
                range: "19/20",
                residual: "-247/2000",
            },
            Branch {
                tau_max: 16,
                mean: "77/80",
                sum_sq: "527/400",
                range: "21/20",
                residual: "-33/400",
            },
        ],
    },
    RefCase {
        name: "W_18",
        nvars: 2,
        germ: "x^4+y^7",
        mu: 18,
        spectrum: &["11/28", "15/28", "9/14", "19/28", "11/14", "23/28", "25/28", "13/14", "27/28", "29/28", "15/14", "31/28", "33/28", "17/14", "37/28", "19/14", "41/28", "45/28"],
        branches: &[
            Branch {
                tau_max: 16,
                mean: "209/224",
                sum_sq: "3655/3136",
                range: "27/28",
                residual: "-377/3136",
            },
            Branch {
                tau_max: 17,
                mean: "27/28",
                sum_sq: "561/392",
                range: "15/14",
                residual: "-17/196",
            },
        ],
    },
    RefCase {
        name: "Q_16",
        nvars: 3,
        germ: "x^3+y*z^2+y^7",
        mu: 16,
        spectrum: &["19/21", "22/21", "25/21", "26/21", "4/3", "4/3", "29/21", "31/21", "32/21", "34/21", "5/3", "5/3", "37/21", "38/21", "41/21", "44/21"],
        branches: &[
            Branch {
                tau_max: 14,
                mean: "419/294",
                sum_sq: "1955/2058",
                range: "19/21",
                residual: "-326/3087",
            },
            Branch {
                tau_max: 15,
                mean: "92/63",
                sum_sq: "1600/1323",
                range: "22/21",
                residual: "-265/2646",
            },
        ],
    },
    RefCase {
        name: "Q_17",
        nvars: 3,
        germ: "x^3+y*z^2+x*y^5",
        mu: 17,
        spectrum: &["9/10", "31/30", "7/6", "37/30", "13/10", "4/3", "41/30", "43/30", "3/2", "47/30", "49/30", "5/3", "17/10", "53/30", "11/6", "59/30", "21/10"],
        branches: &[
            Branch {
                tau_max: 15,
                mean: "643/450",
                sum_sq: "7063/6750",
                range: "14/15",
                residual: "-406/3375",
            },
            Branch {
                tau_max: 16,
                mean: "117/80",
                sum_sq: "527/400",
                range: "16/15",
                residual: "-377/3600",
            },
        ],
    },
    RefCase {
        name: "Q_18",
        nvars: 3,
        germ: "x^3+y*z^2+y^8",
        mu: 18,
        spectrum: &["43/48", "49/48", "55/48", "59/48", "61/48", "4/3", "65/48", "67/48", "71/48", "73/48", "77/48", "79/48", "5/3", "83/48", "85/48", "89/48", "95/48", "101/48"],
        branches: &[
            Branch {
                tau_max: 16,
                mean: "275/192",
                sum_sq: "293/256",
                range: "23/24",
                residual: "-307/2304",
            },
            Branch {
                tau_max: 17,
                mean: "1195/816",
                sum_sq: "3103/2176",
                range: "13/12",
                residual: "-2129/19584",
            },
        ],
    },
    RefCase {
        name: "S_16",
        nvars: 3,
        germ: "x^2*z+y*z^2+x*y^4",
        mu: 16,
        spectrum: &["15/17", "18/17", "20/17", "21/17", "22/17", "23/17", "24/17", "25/17", "26/17", "27/17", "28/17", "29/17", "30/17", "31/17", "33/17", "36/17"],
        branches: &[
            Branch {
                tau_max: 14,
                mean: "339/238",
                sum_sq: "4009/4046",
                range: "16/17",
                residual: "-1301/12138",
            },
            Branch {
                tau_max: 15,
                mean: "124/85",
                sum_sq: "1792/1445",
                range: "18/17",
                residual: "-241/2890",
            },
        ],
    },
    RefCase {
        name: "S_17",
        nvars: 3,
        germ: "x^2*z+y*z^2+y^6",
        mu: 17,
        spectrum: &["7/8", "25/24", "7/6", "29/24", "31/24", "4/3", "11/8", "35/24", "3/2", "37/24", "13/8", "5/3", "41/24", "43/24", "11/6", "47/24", "17/8"],
        branches: &[
            Branch {
                tau_max: 15,
                mean: "257/180",
                sum_sq: "4717/4320",
                range: "23/24",
                residual: "-229/2160",
            },
            Branch {
                tau_max: 16,
                mean: "187/128",
                sum_sq: "4165/3072",
                range: "13/12",
                residual: "-817/9216",
            },
        ],
    },
    RefCase {
        name: "U_16",
        nvars: 3,
        germ: "x^3+x*z^2+y^5",
        mu: 16,
        spectrum: &["13/15", "16/15", "6/5", "6/5", "19/15", "7/5", "7/5", "22/15", "23/15", "8/5", "8/5", "26/15", "9/5", "9/5", "29/15", "32/15"],
        branches: &[
            Branch {
                tau_max: 14,
                mean: "299/210",
                sum_sq: "3209/3150",
                range: "14/15",
                residual: "-221/3150",
            },
            Branch {
                tau_max: 15,
                mean: "328/225",
                sum_sq: "4256/3375",
                range: "16/15",
                residual: "-244/3375",
            },
        ],
    },
    RefCase {
        name: "J_3_p2",
        nvars: 2,
        germ: "x^3+x^2*y^3+y^11",
        mu: 18,
        spectrum: &["4/9", "6/11", "7/11", "8/11", "7/9", "9/11", "8/9", "10/11", "1/1", "1/1", "12/11", "10/9", "13/11", "11/9", "14/11", "15/11", "16/11", "14/9"],
        branches: &[
            Branch {
                tau_max: 16,
                mean: "371/396",
                sum_sq: "10495/9801",
                range: "91/99",
                residual: "-1517/9801",
            },
            Branch {
                tau_max: 17,
                mean: "148/153",
                sum_sq: "6680/5049",
                range: "100/99",
                residual: "-545/5049",
            },
        ],
    },
    RefCase {
        name: "J_3_p4",
        nvars: 2,
        germ: "x^3+x^2*y^3+y^13",
        mu: 20,
        spectrum: &["4/9", "7/13", "8/13", "9/13", "10/13", "7/9", "11/13", "8/9", "12/13", "1/1", "1/1", "14/13", "10/9", "15/13", "11/9", "16/13", "17/13", "18/13", "19/13", "14/9"],
        branches: &[
            Branch {
                tau_max: 18,
                mean: "1987/2106",
                sum_sq: "305177/246402",
                range: "110/117",
                residual: "-42313/246402",
            },
            Branch {
                tau_max: 19,
                mean: "166/171",
                sum_sq: "29866/20007",
                range: "119/117",
                residual: "-9413/80028",
            },
        ],
    },
    RefCase {
        name: "J_3_p6",
        nvars: 2,
        germ: "x^3+x^2*y^3+y^15",
        mu: 22,
        spectrum: &["4/9", "8/15", "3/5", "2/3", "11/15", "7/9", "4/5", "13/15", "8/9", "14/15", "1/1", "1/1", "16/15", "10/9", "17/15", "6/5", "11/9", "19/15", "4/3", "7/5", "22/15", "14/9"],
        branches: &[
            Branch {
                tau_max: 20,
                mean: "427/450",
                sum_sq: "4747/3375",
                range: "43/45",
                residual: "-628/3375",
            },
            Branch {
                tau_max: 21,
                mean: "184/189",
                sum_sq: "14134/8505",
                range: "46/45",
                residual: "-2161/17010",
            },
        ],
    },
    RefCase {
        name: "J_3_p8",
        nvars: 2,
        germ: "x^3+x^2*y^3+y^17",
        mu: 24,
        spectrum: &["4/9", "9/17", "10/17", "11/17", "12/17", "13/17", "7/9", "14/17", "15/17", "8/9", "16/17", "1/1", "1/1", "18/17", "10/9", "19/17", "20/17", "11/9", "21/17", "22/17", "23/17", "24/17", "25/17", "14/9"],
        branches: &[
            Branch {
                tau_max: 22,
                mean: "3209/3366",
                sum_sq: "810889/514998",
                range: "148/153",
                residual: "-102419/514998",
            },
            Branch {
                tau_max: 23,
                mean: "202/207",
                sum_sq: "19324/10557",
                range: "157/153",
                residual: "-1919/14076",
            },
        ],
    },
    RefCase {
        name: "J_3_p10",
        nvars: 2,
        germ: "x^3+x^2*y^3+y^19",
        mu: 26,
        spectrum: &["4/9", "10/19", "11/19", "12/19", "13/19", "14/19", "7/9", "15/19", "16/19", "8/9", "17/19", "18/19", "1/1", "1/1", "20/19", "21/19", "10/9", "22/19", "23/19", "11/9", "24/19", "25/19", "26/19", "27/19", "28/19", "14/9"],
        branches: &[
            Branch {
                tau_max: 24,
                mean: "491/513",
                sum_sq: "152860/87723",
                range: "167/171",
                residual: "-18482/87723",
            },
            Branch {
                tau_max: 25,
                mean: "44/45",
                sum_sq: "3076/1539",
                range: "176/171",
                residual: "-224/1539",
            },
        ],
    },
    RefCase {
        name: "Z_1_p2",
        nvars: 2,
        germ: "x^3*y+x^2*y^3+y^9",
        mu: 17,
        spectrum: &["3/7", "5/9", "2/3", "5/7", "7/9", "6/7", "8/9", "1/1", "1/1", "1/1", "10/9", "8/7", "11/9", "9/7", "4/3", "13/9", "11/7"],
        branches: &[
            Branch {
                tau_max: 15,
                mean: "881/945",
                sum_sq: "59834/59535",
                range: "19/21",
                residual: "-29989/238140",
            },
            Branch {
                tau_max: 16,
                mean: "27/28",
                sum_sq: "1655/1323",
                range: "64/63",
                residual: "-137/1323",
            },
        ],
    },
    RefCase {
        name: "Z_1_p4",
        nvars: 2,
        germ: "x^3*y+x^2*y^3+y^11",
        mu: 19,
        spectrum: &["3/7", "6/11", "7/11", "5/7", "8/11", "9/11", "6/7", "10/11", "1/1", "1/1", "1/1", "12/11", "8/7", "13/11", "14/11", "9/7", "15/11", "16/11", "11/7"],
        branches: &[
            Branch {
                tau_max: 17,
                mean: "1230/1309",
                sum_sq: "118046/100793",
                range: "72/77",
                residual: "-15472/100793",
            },
            Branch {
                tau_max: 18,
                mean: "61/63",
                sum_sq: "6896/4851",
                range: "79/77",
                residual: "-1139/9702",
            },
        ],
    },
    RefCase {
        name: "Z_1_p6",
        nvars: 2,
        germ: "x^3*y+x^2*y^3+y^13",
        mu: 21,
        spectrum: &["3/7", "7/13", "8/13", "9/13", "5/7", "10/13", "11/13", "6/7", "12/13", "1/1", "1/1", "1/1", "14/13", "8/7", "15/13", "16/13", "9/7", "17/13", "18/13", "19/13", "11/7"],
        branches: &[
            Branch {
                tau_max: 19,
                mean: "1635/1729",
                sum_sq: "210576/157339",
                range: "87/91",
                residual: "-110375/629356",
            },
            Branch {
                tau_max: 20,
                mean: "34/35",
                sum_sq: "724/455",
                range: "94/91",
                residual: "-178/1365",
            },
        ],
    },
    RefCase {
        name: "Z_1_p8",
        nvars: 2,
        germ: "x^3*y+x^2*y^3+y^15",
        mu: 23,
        spectrum: &["3/7", "8/15", "3/5", "2/3", "5/7", "11/15", "4/5", "6/7", "13/15", "14/15", "1/1", "1/1", "1/1", "16/15", "17/15", "8/7", "6/5", "19/15", "9/7", "4/3", "7/5", "22/15", "11/7"],
        branches: &[
            Branch {
                tau_max: 21,
                mean: "2096/2205",
                sum_sq: "348668/231525",
                range: "34/35",
                residual: "-89849/463050",
            },
            Branch {
                tau_max: 22,
                mean: "75/77",
                sum_sq: "42694/24255",
                range: "109/105",
                residual: "-1387/9702",
            },
        ],
    },
    RefCase {
        name: "Z_1_p10",
        nvars: 2,
        germ: "x^3*y+x^2*y^3+y^17",
        mu: 25,
        spectrum: &["3/7", "9/17", "10/17", "11/17", "12/17", "5/7", "13/17", "14/17", "6/7", "15/17", "16/17", "1/1", "1/1", "1/1", "18/17", "19/17", "8/7", "20/17", "21/17", "9/7", "22/17", "23/17", "24/17", "25/17", "11/7"],
        branches: &[
            Branch {
                tau_max: 23,
                mean: "2613/2737",
                sum_sq: "545134/325703",
                range: "117/119",
                residual: "-274553/1302812",
            },
            Branch {
                tau_max: 24,
                mean: "41/42",
                sum_sq: "4820/2499",
                range: "124/119",
                residual: "-388/2499",
            },
        ],
    },
    RefCase {
        name: "W_1_p2",
        nvars: 2,
        germ: "x^4+x^2*y^3+y^8",
        mu: 17,
        spectrum: &["5/12", "9/16", "2/3", "11/16", "13/16", "5/6", "11/12", "15/16", "1/1", "17/16", "13/12", "7/6", "19/16", "21/16", "4/3", "23/16", "19/12"],
        branches: &[
            Branch {
                tau_max: 15,
                mean: "671/720",
                sum_sq: "2219/2160",
                range: "11/12",
                residual: "-16/135",
            },
            Branch {
                tau_max: 16,
                mean: "185/192",
                sum_sq: "973/768",
                range: "49/48",
                residual: "-217/2304",
            },
        ],
    },
    RefCase {
        name: "W_1_p4",
        nvars: 2,
        germ: "x^4+x^2*y^3+y^10",
        mu: 19,
        spectrum: &["5/12", "11/20", "13/20", "2/3", "3/4", "5/6", "17/20", "11/12", "19/20", "1/1", "21/20", "13/12", "23/20", "7/6", "5/4", "4/3", "27/20", "29/20", "19/12"],
        branches: &[
            Branch {
                tau_max: 17,
                mean: "479/510",
                sum_sq: "4558/3825",
                range: "14/15",
                residual: "-111/850",
            },
            Branch {
                tau_max: 18,
                mean: "209/216",
                sum_sq: "18637/12960",
                range: "31/30",
                residual: "-1451/12960",
            },
        ],
    },
    RefCase {
        name: "W_1_p6",
        nvars: 2,
        germ: "x^4+x^2*y^3+y^12",
        mu: 21,
        spectrum: &["5/12", "13/24", "5/8", "2/3", "17/24", "19/24", "5/6", "7/8", "11/12", "23/24", "1/1", "25/24", "13/12", "9/8", "7/6", "29/24", "31/24", "4/3", "11/8", "35/24", "19/12"],
        branches: &[
            Branch {
                tau_max: 19,
                mean: "431/456",
                sum_sq: "3715/2736",
                range: "23/24",
                residual: "-97/608",
            },
            Branch {
                tau_max: 20,
                mean: "233/240",
                sum_sq: "4631/2880",
                range: "25/24",
                residual: "-41/320",
            },
        ],
    },
    RefCase {
        name: "W_1_p8",
        nvars: 2,
        germ: "x^4+x^2*y^3+y^14",
        mu: 23,
        spectrum: &["5/12", "15/28", "17/28", "2/3", "19/28", "3/4", "23/28", "5/6", "25/28", "11/12", "27/28", "1/1", "29/28", "13/12", "31/28", "7/6", "33/28", "5/4", "37/28", "4/3", "39/28", "41/28", "19/12"],
        branches: &[
            Branch {
                tau_max: 21,
                mean: "419/441",
                sum_sq: "28243/18522",
                range: "41/42",
                residual: "-13595/74088",
            },
            Branch {
                tau_max: 22,
                mean: "257/264",
                sum_sq: "4379/2464",
                range: "22/21",
                residual: "-3181/22176",
            },
        ],
    },
    RefCase {
        name: "W_1_p10",
        nvars: 2,
        germ: "x^4+x^2*y^3+y^16",
        mu: 25,
        spectrum: &["5/12", "17/32", "19/32", "21/32", "2/3", "23/32", "25/32", "5/6", "27/32", "29/32", "11/12", "31/32", "1/1", "33/32", "13/12", "35/32", "37/32", "7/6", "39/32", "41/32", "4/3", "43/32", "45/32", "47/32", "19/12"],
        branches: &[
            Branch {
                tau_max: 23,
                mean: "2107/2208",
                sum_sq: "44837/26496",
                range: "95/96",
                residual: "-301/1472",
            },
            Branch {
                tau_max: 24,
                mean: "281/288",
                sum_sq: "6725/3456",
                range: "101/96",
                residual: "-547/3456",
            },
        ],
    },
    RefCase {
        name: "Q_2_p2",
        nvars: 3,
        germ: "x^3+y*z^2+x^2*y^2+y^8",
        mu: 16,
        spectrum: &["11/12", "17/16", "19/16", "5/4", "21/16", "4/3", "17/12", "23/16", "25/16", "19/12", "5/3", "27/16", "7/4", "29/16", "31/16", "25/12"],
        branches: &[
            Branch {
                tau_max: 14,
                mean: "137/96",
                sum_sq: "1421/1536",
                range: "43/48",
                residual: "-553/4608",
            },
            Branch {
                tau_max: 15,
                mean: "263/180",
                sum_sq: "5047/4320",
                range: "49/48",
                residual: "-931/8640",
            },
        ],
    },
    RefCase {
        name: "Q_2_p4",
        nvars: 3,
        germ: "x^3+y*z^2+x^2*y^2+y^10",
        mu: 18,
        spectrum: &["11/12", "21/20", "23/20", "5/4", "5/4", "4/3", "27/20", "17/12", "29/20", "31/20", "19/12", "33/20", "5/3", "7/4", "7/4", "37/20", "39/20", "25/12"],
        branches: &[
            Branch {
                tau_max: 16,
                mean: "689/480",
                sum_sq: "15703/14400",
                range: "14/15",
                residual: "-739/4800",
            },
            Branch {
                tau_max: 17,
                mean: "299/204",
                sum_sq: "911/680",
                range: "31/30",
                residual: "-19/153",
            },
        ],
    },
    RefCase {
        name: "Q_2_p6",
        nvars: 3,
        germ: "x^3+y*z^2+x^2*y^2+y^12",
        mu: 20,
        spectrum: &["11/12", "25/24", "9/8", "29/24", "5/4", "31/24", "4/3", "11/8", "17/12", "35/24", "37/24", "19/12", "13/8", "5/3", "41/24", "7/4", "43/24", "15/8", "47/24", "25/12"],
        branches: &[
            Branch {
                tau_max: 18,
                mean: "623/432",
                sum_sq: "13037/10368",
                range: "23/24",
                residual: "-1867/10368",
            },
            Branch {
                tau_max: 19,
                mean: "335/228",
                sum_sq: "459/304",
                range: "25/24",
                residual: "-763/5472",
            },
        ],
    },
    RefCase {
        name: "Q_2_p8",
        nvars: 3,
        germ: "x^3+y*z^2+x^2*y^2+y^14",
        mu: 22,
        spectrum: &["11/12", "29/28", "31/28", "33/28", "5/4", "5/4", "37/28", "4/3", "39/28", "17/12", "41/28", "43/28", "19/12", "45/28", "5/3", "47/28", "7/4", "7/4", "51/28", "53/28", "55/28", "25/12"],
        branches: &[
            Branch {
                tau_max: 20,
                mean: "152/105",
                sum_sq: "57/40",
                range: "41/42",
                residual: "-509/2520",
            },
            Branch {
                tau_max: 21,
                mean: "53/36",
                sum_sq: "2539/1512",
                range: "22/21",
                residual: "-233/1512",
            },
        ],
    },
    RefCase {
        name: "Q_2_p10",
        nvars: 3,
        germ: "x^3+y*z^2+x^2*y^2+y^16",
        mu: 24,
        spectrum: &["11/12", "33/32", "35/32", "37/32", "39/32", "5/4", "41/32", "4/3", "43/32", "45/32", "17/12", "47/32", "49/32", "19/12", "51/32", "53/32", "5/3", "55/32", "7/4", "57/32", "59/32", "61/32", "63/32", "25/12"],
        branches: &[
            Branch {
                tau_max: 22,
                mean: "3067/2112",
                sum_sq: "322945/202752",
                range: "95/96",
                residual: "-14965/67584",
            },
            Branch {
                tau_max: 23,
                mean: "407/276",
                sum_sq: "8161/4416",
                range: "101/96",
                residual: "-4463/26496",
            },
        ],
    },
    RefCase {
        name: "S_1_p2",
        nvars: 3,
        germ: "x^2*z+y*z^2+x^2*y^2+y^7",
        mu: 16,
        spectrum: &["9/10", "15/14", "6/5", "17/14", "13/10", "19/14", "7/5", "3/2", "3/2", "8/5", "23/14", "17/10", "25/14", "9/5", "27/14", "21/10"],
        branches: &[
            Branch {
                tau_max: 14,
                mean: "699/490",
                sum_sq: "1633/1715",
                range: "9/10",
                residual: "-671/6860",
            },
            Branch {
                tau_max: 15,
                mean: "73/50",
                sum_sq: "1039/875",
                range: "36/35",
                residual: "-86/875",
            },
        ],
    },
    RefCase {
        name: "S_1_p4",
        nvars: 3,
        germ: "x^2*z+y*z^2+x^2*y^2+y^9",
        mu: 18,
        spectrum: &["9/10", "19/18", "7/6", "6/5", "23/18", "13/10", "25/18", "7/5", "3/2", "3/2", "8/5", "29/18", "17/10", "31/18", "9/5", "11/6", "35/18", "21/10"],
        branches: &[
            Branch {
                tau_max: 16,
                mean: "1033/720",
                sum_sq: "36127/32400",
                range: "14/15",
                residual: "-4193/32400",
            },
            Branch {
                tau_max: 17,
                mean: "249/170",
                sum_sq: "15601/11475",
                range: "47/45",
                residual: "-1837/15300",
            },
        ],
    },
    RefCase {
        name: "S_1_p6",
        nvars: 3,
        germ: "x^2*z+y*z^2+x^2*y^2+y^11",
        mu: 20,
        spectrum: &["9/10", "23/22", "25/22", "6/5", "27/22", "13/10", "29/22", "7/5", "31/22", "3/2", "3/2", "35/22", "8/5", "37/22", "17/10", "39/22", "9/5", "41/22", "43/22", "21/10"],
        branches: &[
            Branch {
                tau_max: 18,
                mean: "1427/990",
                sum_sq: "34867/27225",
                range: "53/55",
                residual: "-8971/54450",
            },
            Branch {
                tau_max: 19,
                mean: "279/190",
                sum_sq: "1599/1045",
                range: "58/55",
                residual: "-175/1254",
            },
        ],
    },
    RefCase {
        name: "S_1_p8",
        nvars: 3,
        germ: "x^2*z+y*z^2+x^2*y^2+y^13",
        mu: 22,
        spectrum: &["9/10", "27/26", "29/26", "31/26", "6/5", "33/26", "13/10", "35/26", "7/5", "37/26", "3/2", "3/2", "41/26", "8/5", "43/26", "17/10", "45/26", "9/5", "47/26", "49/26", "51/26", "21/10"],
        branches: &[
            Branch {
                tau_max: 20,
                mean: "1881/1300",
                sum_sq: "122319/84500",
                range: "64/65",
                residual: "-49043/253500",
            },
            Branch {
                tau_max: 21,
                mean: "103/70",
                sum_sq: "3867/2275",
                range: "69/65",
                residual: "-1437/9100",
            },
        ],
    },
    RefCase {
        name: "S_1_p10",
        nvars: 3,
        germ: "x^2*z+y*z^2+x^2*y^2+y^15",
        mu: 24,
        spectrum: &["9/10", "31/30", "11/10", "7/6", "6/5", "37/30", "13/10", "13/10", "41/30", "7/5", "43/30", "3/2", "3/2", "47/30", "8/5", "49/30", "17/10", "17/10", "53/30", "9/5", "11/6", "19/10", "59/30", "21/10"],
        branches: &[
            Branch {
                tau_max: 22,
                mean: "479/330",
                sum_sq: "3997/2475",
                range: "1/1",
                residual: "-1081/4950",
            },
            Branch {
                tau_max: 23,
                mean: "339/230",
                sum_sq: "9671/5175",
                range: "16/15",
                residual: "-101/575",
            },
        ],
    },
    RefCase {
        name: "S_1_sharp_p2",
        nvars: 3,
        germ: "",
        mu: 16,
        spectrum: &["9/10", "13/12", "7/6", "5/4", "13/10", "4/3", "17/12", "3/2", "3/2", "19/12", "5/3", "17/10", "7/4", "11/6", "23/12", "21/10"],
        branches: &[
            Branch {
                tau_max: 14,
                mean: "1199/840",
                sum_sq: "9641/10080",
                range: "14/15",
                residual: "-89/672",
            },
            Branch {
                tau_max: 15,
                mean: "73/50",
                sum_sq: "10619/9000",
                range: "61/60",
                residual: "-1637/18000",
            },
        ],
    },
    RefCase {
        name: "S_1_sharp_p4",
        nvars: 3,
        germ: "",
        mu: 18,
        spectrum: &["9/10", "15/14", "8/7", "17/14", "9/7", "13/10", "19/14", "10/7", "3/2", "3/2", "11/7", "23/14", "17/10", "12/7", "25/14", "13/7", "27/14", "21/10"],
        branches: &[
            Branch {
                tau_max: 16,
                mean: "201/140",
                sum_sq: "2741/2450",
                range: "67/70",
                residual: "-1157/7350",
            },
            Branch {
                tau_max: 17,
                mean: "249/170",
                sum_sq: "8017/5950",
                range: "36/35",
                residual: "-653/5950",
            },
        ],
    },
    RefCase {
        name: "S_1_sharp_p6",
        nvars: 3,
        germ: "",
        mu: 20,
        spectrum: &["9/10", "17/16", "9/8", "19/16", "5/4", "13/10", "21/16", "11/8", "23/16", "3/2", "3/2", "25/16", "13/8", "27/16", "17/10", "7/4", "29/16", "15/8", "31/16", "21/10"],
        branches: &[
            Branch {
                tau_max: 18,
                mean: "2077/1440",
                sum_sq: "147749/115200",
                range: "39/40",
                residual: "-20731/115200",
            },
            Branch {
                tau_max: 19,
                mean: "279/190",
                sum_sq: "921/608",
                range: "83/80",
                residual: "-2333/18240",
            },
        ],
    },
    RefCase {
        name: "S_1_sharp_p8",
        nvars: 3,
        germ: "",
        mu: 22,
        spectrum: &["9/10", "19/18", "10/9", "7/6", "11/9", "23/18", "13/10", "4/3", "25/18", "13/9", "3/2", "3/2", "14/9", "29/18", "5/3", "17/10", "31/18", "16/9", "11/6", "17/9", "35/18", "21/10"],
        branches: &[
            Branch {
                tau_max: 20,
                mean: "1303/900",
                sum_sq: "19537/13500",
                range: "89/90",
                residual: "-2713/13500",
            },
            Branch {
                tau_max: 21,
                mean: "103/70",
                sum_sq: "7948/4725",
                range: "47/45",
                residual: "-2753/18900",
            },
        ],
    },
    RefCase {
        name: "S_1_sharp_p10",
        nvars: 3,
        germ: "",
        mu: 24,
        spectrum: &["9/10", "21/20", "11/10", "23/20", "6/5", "5/4", "13/10", "13/10", "27/20", "7/5", "29/20", "3/2", "3/2", "31/20", "8/5", "33/20", "17/10", "17/10", "7/4", "9/5", "37/20", "19/10", "39/20", "21/10"],
        branches: &[
            Branch {
                tau_max: 22,
                mean: "639/440",
                sum_sq: "14189/8800",
                range: "1/1",
                residual: "-5833/26400",
            },
            Branch {
                tau_max: 23,
                mean: "339/230",
                sum_sq: "8507/4600",
                range: "21/20",
                residual: "-1501/9200",
            },
        ],
    },
    RefCase {
        name: "U_1_p2",
        nvars: 3,
        germ: "",
        mu: 16,
        spectrum: &["8/9", "12/11", "13/11", "11/9", "14/11", "15/11", "13/9", "16/11", "17/11", "14/9", "18/11", "19/11", "16/9", "20/11", "21/11", "19/9"],
        branches: &[
            Branch {
                tau_max: 14,
                mean: "989/693",
                sum_sq: "22276/22869",
                range: "92/99",
                residual: "-2518/22869",
            },
            Branch {
                tau_max: 15,
                mean: "197/135",
                sum_sq: "15916/13365",
                range: "101/99",
                residual: "-4511/53460",
            },
        ],
    },
    RefCase {
        name: "U_1_p4",
        nvars: 3,
        germ: "",
        mu: 18,
        spectrum: &["8/9", "14/13", "15/13", "11/9", "16/13", "17/13", "18/13", "13/9", "19/13", "20/13", "14/9", "21/13", "22/13", "23/13", "16/9", "24/13", "25/13", "19/9"],
        branches: &[
            Branch {
                tau_max: 16,
                mean: "2687/1872",
                sum_sq: "248431/219024",
                range: "112/117",
                residual: "-31121/219024",
            },
            Branch {
                tau_max: 17,
                mean: "224/153",
                sum_sq: "8104/5967",
                range: "121/117",
                residual: "-851/7956",
            },
        ],
    },
    RefCase {
        name: "U_1_p6",
        nvars: 3,
        germ: "",
        mu: 20,
        spectrum: &["8/9", "16/15", "17/15", "6/5", "11/9", "19/15", "4/3", "7/5", "13/9", "22/15", "23/15", "14/9", "8/5", "5/3", "26/15", "16/9", "9/5", "28/15", "29/15", "19/9"],
        branches: &[
            Branch {
                tau_max: 18,
                mean: "584/405",
                sum_sq: "23632/18225",
                range: "44/45",
                residual: "-3098/18225",
            },
            Branch {
                tau_max: 19,
                mean: "251/171",
                sum_sq: "11738/7695",
                range: "47/45",
                residual: "-3949/30780",
            },
        ],
    },
    RefCase {
        name: "U_1_p8",
        nvars: 3,
        germ: "",
        mu: 22,
        spectrum: &["8/9", "18/17", "19/17", "20/17", "11/9", "21/17", "22/17", "23/17", "24/17", "13/9", "25/17", "26/17", "14/9", "27/17", "28/17", "29/17", "30/17", "16/9", "31/17", "32/17", "33/17", "19/9"],
        branches: &[
            Branch {
                tau_max: 20,
                mean: "4429/3060",
                sum_sq: "75971/52020",
                range: "152/153",
                residual: "-30487/156060",
            },
            Branch {
                tau_max: 21,
                mean: "278/189",
                sum_sq: "48946/28917",
                range: "161/153",
                residual: "-17219/115668",
            },
        ],
    },
    RefCase {
        name: "U_1_p10",
        nvars: 3,
        germ: "",
        mu: 24,
        spectrum: &["8/9", "20/19", "21/19", "22/19", "23/19", "11/9", "24/19", "25/19", "26/19", "27/19", "13/9", "28/19", "29/19", "14/9", "30/19", "31/19", "32/19", "33/19", "16/9", "34/19", "35/19", "36/19", "37/19", "19/9"],
        branches: &[
            Branch {
                tau_max: 22,
                mean: "2731/1881",
                sum_sq: "522680/321651",
                range: "172/171",
                residual: "-70462/321651",
            },
            Branch {
                tau_max: 23,
                mean: "305/207",
                sum_sq: "21944/11799",
                range: "181/171",
                residual: "-7973/47196",
            },
        ],
    },
];

