/* cc -Icrates/ffi/include crates/ffi/examples/smoke.c target/release/libccx_ffi.a -lpthread -ldl -lm */
#include <stdio.h>
#include "ccx.h"

int main(void) {
    CcxComplex *x = NULL;
    if (ccx_complex_parse("ccx 1\ncube 000 001 010 011 100 101 110 111\n", &x) != CCX_STATUS_OK) {
        fprintf(stderr, "%s\n", ccx_last_error());
        return 1;
    }
    size_t d = 0;
    ccx_complex_distance(x, "000", "111", &d);
    printf("distance %zu\n", d);

    CcxMap *f = NULL;
    const char *aut = "aut 1\n000 -> 111\n001 -> 110\n010 -> 101\n011 -> 100\n"
                      "100 -> 011\n101 -> 010\n110 -> 001\n111 -> 000\n";
    CcxVerdict v;
    char *report = NULL;
    if (ccx_map_parse(x, aut, &f) == CCX_STATUS_OK && ccx_classify(x, f, 0, &v, &report) == CCX_STATUS_OK) {
        printf("%s\n", report);
        ccx_string_free(report);
    }
    ccx_map_free(f);
    ccx_complex_free(x);
    return 0;
}
