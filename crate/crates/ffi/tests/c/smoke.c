#include <stdio.h>
#include <string.h>

#include "eqcob.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "check failed: %s (line %d): %s\n",  \
                    #cond, __LINE__, eqcob_last_error_message()); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    EqcobClass *cls = NULL;
    CHECK(eqcob_class_new(2, 5, "1;2;3;4;2,3", 0, &cls) == EQCOB_STATUS_OK);

    uint32_t degree = 0, rank = 0;
    CHECK(eqcob_class_degree(cls, &degree) == EQCOB_STATUS_OK && degree == 6);
    CHECK(eqcob_class_rank(cls, &rank) == EQCOB_STATUS_OK && rank == 4);

    bool nonbounding = false;
    CHECK(eqcob_class_is_nonbounding(cls, &nonbounding) == EQCOB_STATUS_OK && nonbounding);

    EqcobCertificate *cert = NULL;
    CHECK(eqcob_certify(cls, 0, 0, &cert) == EQCOB_STATUS_OK && cert != NULL);

    uint32_t k = 0;
    CHECK(eqcob_certificate_k(cert, &k) == EQCOB_STATUS_OK && k > degree);

    char *json = NULL;
    CHECK(eqcob_certificate_to_json(cert, &json) == EQCOB_STATUS_OK);
    bool ok = false;
    CHECK(eqcob_recheck_json(json, &ok) == EQCOB_STATUS_OK && ok);
    printf("k=%u\n%s", k, json);
    eqcob_string_free(json);
    eqcob_certificate_free(cert);
    eqcob_class_free(cls);

    CHECK(eqcob_class_new(0, 3, NULL, 0, &cls) == EQCOB_STATUS_INVALID_ARGUMENT);
    CHECK(cls == NULL);
    CHECK(strlen(eqcob_last_error_message()) > 0);
    return 0;
}
