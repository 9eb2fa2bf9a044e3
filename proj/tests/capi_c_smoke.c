/* The public header must be usable from C. */
#include <stdio.h>
#include <string.h>

#include <adjoint/adjoint.h>

int main(void)
{
    adj_profile *p = NULL;
    char *chi = NULL;
    int ok;
    if (adj_catalog_get("P3", &p) != ADJ_OK) {
        fprintf(stderr, "%s\n", adj_last_error());
        return 1;
    }
    if (adj_chi(p, "2H", &chi) != ADJ_OK) {
        adj_profile_free(p);
        return 1;
    }
    ok = strcmp(chi, "10/1") == 0;
    printf("chi(O(2)) on P3 = %s\n", chi);
    adj_string_free(chi);
    adj_profile_free(p);
    return ok ? 0 : 1;
}
