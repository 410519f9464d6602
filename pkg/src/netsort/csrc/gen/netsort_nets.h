/* Generated by tools/gen_sorters.py -- do not edit. */
#ifndef NETSORT_NETS_H
#define NETSORT_NETS_H

#include "netsort_core.h"

extern const ns_net_fn ns_net_table_best[17][9];
extern const ns_net_fn ns_net_table_bn_l[17][9];
extern const ns_net_fn ns_net_table_bn_p[17][9];
extern const ns_net_fn ns_net_table_bn_r[17][9];

#endif
