#include <math.h>
#include <stdio.h>
#include <string.h>

#include "qtheta.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__,   \
                    #cond, qt_last_error());                          \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    QtSeries *eta = NULL;
    CHECK(qt_series_expand("eta(1)", 2, &eta) == QT_STATUS_OK);
    char *listing = NULL;
    CHECK(qt_series_to_string(eta, &listing) == QT_STATUS_OK);
    CHECK(strcmp(listing, "1/24: 1, 25/24: -1, 49/24: -1") == 0);
    qt_string_free(listing);
    qt_series_free(eta);

    QtSeries *bad = NULL;
    CHECK(qt_series_expand("eta(1/5", 2, &bad) == QT_STATUS_PARSE);
    CHECK(bad == NULL && strlen(qt_last_error()) > 0);

    QtComplex tau = {0.0, 1.0}, r;
    CHECK(qt_rrcf(tau, &r) == QT_STATUS_OK);
    double closed = sqrt((5.0 + sqrt(5.0)) / 2.0) - (1.0 + sqrt(5.0)) / 2.0;
    CHECK(fabs(r.re - closed) < 1e-10 && fabs(r.im) < 1e-12);

    QtVerdict v;
    CHECK(qt_verify("euler_pentagonal", 100, 42, 0.0, &v) == QT_STATUS_OK);
    CHECK(v == QT_VERDICT_PASS);
    CHECK(qt_verify("no_such_id", 0, 42, 0.0, &v) == QT_STATUS_UNKNOWN_ID);

    CHECK(qt_registry_len() > 0 && qt_registry_id(qt_registry_len()) == NULL);
    printf("ok %s\n", qt_version());
    return 0;
}
