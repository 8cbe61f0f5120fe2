//! Sub-range tables as printed: one row per sub-range, cells kept in their
//! printed notation (`k√m/d` for square roots, `v (w)` for a value improved from
//! `w`, a trailing `*` for the selected `b35` candidate).

use super::tables::TableRow;

pub const TABLE_ROWS: [TableRow; 19] = [
    TableRow {
        case: 1,
        subrange: 1,
        given: &["0", "20/100"],
        lower_diag: ["3/40", "0", "0", "0", "0"],
        upper_diag: ["1/5", "1/10", "1/8", "1/6", "1/5"],
        intermediates: ["35/6", "241/100", "√56810/437", "2304/625", "48/25", "13/22"],
        offdiag: ["53/100 (1/2)", "1/2", "53/100", "53/100 *", "53/100", "1/2 (49/100)"],
        p_at_one: "-305646963/4000000000",
    },
    TableRow {
        case: 1,
        subrange: 2,
        given: &["20/100", "26/100"],
        lower_diag: ["3/50", "0", "0", "0", "1/5"],
        upper_diag: ["1/4", "3/40", "1/10", "3/20", "13/50"],
        intermediates: ["4284/625", "261/100", "3√1252230/6230", "1332/625", "29/20", "√60605/391"],
        offdiag: ["1/2", "49/100", "13/25", "47/100 *", "23/50", "49/100 (41/100)"],
        p_at_one: "-136143299/2500000000",
    },
    TableRow {
        case: 2,
        subrange: 1,
        given: &["0", "14/100"],
        lower_diag: ["0", "0", "0", "0", "0"],
        upper_diag: ["7/50", "1/10", "7/50", "7/50", "7/50"],
        intermediates: ["2396304/390625", "247/100", "68√14867/14867", "2396304/390625", "247/100", "68√14867/14867"],
        offdiag: ["63/100 (1/2)", "14/25", "63/100 (1/2)", "63/100 *", "63/100 *", "14/25"],
        p_at_one: "-390487023/1250000000",
    },
    TableRow {
        case: 2,
        subrange: 2,
        given: &["14/100", "20/100"],
        lower_diag: ["7/50", "0", "0", "0", "0"],
        upper_diag: ["1/5", "9/100", "1/6", "1/5", "1/5"],
        intermediates: ["64/15", "103/50", "√17894630/7690", "2304/625", "48/25", "13/22"],
        offdiag: ["1/2", "9/20", "14/25", "49/100", "1/2 *", "1/2"],
        p_at_one: "-48643/1000000",
    },
    TableRow {
        case: 2,
        subrange: 3,
        given: &["20/100", "24/100"],
        lower_diag: ["1/5", "0", "0", "0", "0"],
        upper_diag: ["6/25", "3/40", "3/20", "6/25", "6/25"],
        intermediates: ["58786/15625", "193/100", "√87262/542", "976144/390625", "79/50", "9√10402/1486"],
        offdiag: ["1/2", "41/100", "59/100", "11/25", "11/25 *", "11/25"],
        p_at_one: "-5699171/500000000",
    },
    TableRow {
        case: 2,
        subrange: 4,
        given: &["24/100", "28/100"],
        lower_diag: ["6/25", "0", "0", "0", "0"],
        upper_diag: ["7/25", "13/200", "13/100", "1/4", "1/4"],
        intermediates: ["9657/2500", "49/25", "√279110/988", "1188/625", "137/100", "√366/30"],
        offdiag: ["1/2", "39/100", "3/5", "21/50", "21/50 *", "41/100"],
        p_at_one: "-12411/4000000",
    },
    TableRow {
        case: 2,
        subrange: 5,
        given: &["28/100", "36/100"],
        lower_diag: ["7/25", "0", "0", "0", "0"],
        upper_diag: ["9/25", "11/200", "11/100", "11/50", "11/50"],
        intermediates: ["1895166/390625", "11/5", "4√751137/6767", "489216/390625", "111/100", "8√465063/8159"],
        offdiag: ["1/2", "37/100", "31/50", "11/25 *", "43/100", "39/100"],
        p_at_one: "-46207263/2500000000",
    },
    TableRow {
        case: 2,
        subrange: 6,
        given: &["36/100", "50/100"],
        lower_diag: ["9/25", "0", "0", "0", "0"],
        upper_diag: ["1/2", "7/200", "7/100", "7/50", "7/50"],
        intermediates: ["3095226/390625", "281/100", "√60285298/16571", "0", "0", "√1462/43"],
        offdiag: ["1/2", "6/25", "13/20", "11/25 *", "11/25", "9/25"],
        p_at_one: "-72/15625",
    },
    TableRow {
        case: 3,
        subrange: 1,
        given: &["0", "12/100", "0", "26/100"],
        lower_diag: ["1/25", "0", "0", "0", "19/200"],
        upper_diag: ["1/4", "1/10", "3/25", "3/25", "13/50"],
        intermediates: ["2795584/390625", "267/100", "√73334649/15863", "1332/625", "29/20", "√60605/391"],
        offdiag: ["1/2", "49/100", "51/100", "23/50 *", "11/25", "49/100 (41/100)"],
        p_at_one: "-214977947/20000000000",
    },
    TableRow {
        case: 3,
        subrange: 2,
        given: &["12/100", "26/100", "0", "18/100"],
        lower_diag: ["1/50", "0", "3/25", "0", "3/50"],
        upper_diag: ["9/50", "19/200", "13/50", "1/8", "9/50"],
        intermediates: ["2331/625", "193/100", "√22/8", "1721344/390625", "209/100", "66√12973/12973"],
        offdiag: ["1/2", "9/20", "51/100", "11/25", "9/20 *", "49/100"],
        p_at_one: "-335607/1250000000",
    },
    TableRow {
        case: 3,
        subrange: 3,
        given: &["12/100", "26/100", "18/100", "21/100"],
        lower_diag: ["1/100", "0", "3/25", "0", "9/50"],
        upper_diag: ["19/100", "1/15", "13/50", "1/10", "21/100"],
        intermediates: ["63936/15625", "101/50", "√44526/362", "5752701/1562500", "191/100", "√204021627/24146"],
        offdiag: ["13/25", "47/100", "13/25", "9/20", "9/20 *", "12/25"],
        p_at_one: "-7419049/156250000",
    },
    TableRow {
        case: 3,
        subrange: 4,
        given: &["12/100", "26/100", "21/100", "26/100"],
        lower_diag: ["0", "0", "3/25", "0", "21/100"],
        upper_diag: ["17/100", "17/300", "13/50", "17/200", "13/50"],
        intermediates: ["1685979/390625", "207/100", "√6307787/4314", "1216116/390625", "44/25", "√46730082/11334"],
        offdiag: ["13/25", "12/25", "13/25", "43/100 *", "21/50", "12/25 (23/50)"],
        p_at_one: "-7326711/156250000",
    },
    TableRow {
        case: 4,
        subrange: 1,
        given: &["0", "15/100", "0", "26/100"],
        lower_diag: ["3/50", "0", "1/15", "0", "0"],
        upper_diag: ["3/20", "1/10", "13/50", "3/20", "3/20"],
        intermediates: ["52836/15625", "183/100", "3√828714/4682", "14161/2500", "119/50", "9/16"],
        offdiag: ["1/2", "9/20", "13/25", "47/100", "49/100 *", "27/50"],
        p_at_one: "-17003473/468750000",
    },
    TableRow {
        case: 4,
        subrange: 2,
        given: &["15/100", "25/100", "0", "15/100"],
        lower_diag: ["3/20", "0", "0", "0", "0"],
        upper_diag: ["1/4", "7/80", "3/20", "3/20", "1/4"],
        intermediates: ["14161/2500", "119/50", "3√2/8", "9/4", "3/2", "5/8"],
        offdiag: ["1/2", "23/50", "57/100", "9/20 *", "9/20", "23/50 (11/25)"],
        p_at_one: "-1684287/80000000",
    },
    TableRow {
        case: 4,
        subrange: 3,
        given: &["15/100", "25/100", "15/100", "26/100"],
        lower_diag: ["3/20", "0", "3/20", "0", "0"],
        upper_diag: ["1/4", "1/15", "13/50", "1/6", "7/40"],
        intermediates: ["1184/375", "177/100", "2√149003/1367", "1287/400", "179/100", "5√5406/612"],
        offdiag: ["1/2", "39/100", "57/100", "21/50", "43/100 *", "12/25"],
        p_at_one: "-31285863/2000000000",
    },
    TableRow {
        case: 4,
        subrange: 4,
        given: &["25/100", "40/100", "0", "10/100"],
        lower_diag: ["1/4", "0", "0", "0", "0"],
        upper_diag: ["2/5", "1/16", "1/10", "1/10", "1/4"],
        intermediates: ["5184/625", "72/25", "√161/26", "18/25", "21/25", "5√1507/274"],
        offdiag: ["1/2", "2/5", "61/100", "43/100 *", "21/50", "2/5 (19/50)"],
        p_at_one: "-6702413/400000000",
    },
    TableRow {
        case: 4,
        subrange: 5,
        given: &["25/100", "40/100", "10/100", "20/100"],
        lower_diag: ["1/4", "0", "1/10", "0", "0"],
        upper_diag: ["2/5", "1/20", "1/5", "1/8", "3/20"],
        intermediates: ["126/25", "56/25", "√140910/732", "714/625", "53/50", "√66/12"],
        offdiag: ["1/2", "7/20", "61/100", "11/25 *", "11/25", "43/100"],
        p_at_one: "-136283/6250000",
    },
    TableRow {
        case: 4,
        subrange: 6,
        given: &["25/100", "40/100", "20/100", "26/100"],
        lower_diag: ["1/4", "0", "1/5", "0", "0"],
        upper_diag: ["2/5", "1/60", "1/4", "1/20", "1/20"],
        intermediates: ["513/100", "113/50", "√20155/278", "1026/625", "32/25", "√493/34"],
        offdiag: ["13/25 (1/2)", "39/100", "61/100", "13/25 *", "13/25", "53/100"],
        p_at_one: "-153180277/1250000000",
    },
    TableRow {
        case: 4,
        subrange: 7,
        given: &["40/100", "50/100", "0", "26/100"],
        lower_diag: ["2/5", "0", "0", "0", "0"],
        upper_diag: ["1/2", "1/40", "1/10", "1/20", "1/10"],
        intermediates: ["6156/625", "313/100", "√105415/727", "0", "0", "√7/3"],
        offdiag: ["1/2", "7/25", "67/100", "12/25 *", "23/50", "21/50"],
        p_at_one: "-2089397/31250000",
    },
];
