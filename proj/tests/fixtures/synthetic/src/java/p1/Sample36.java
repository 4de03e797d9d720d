package synth.java.p1;

import androidx.annotation.NonNull;
import com.google.common.base.Preconditions;
import javax.annotation.Nonnull;
import org.apache.commons.lang3.Validate;
import org.jetbrains.annotations.NotNull;

public class Sample36 {
  protected int field0;
  @NonNull private String field1 = "";

  @Deprecated
  public String method0(@Nonnull String a, int b) {
    assert b > 100 : "invariant";
    return a;
  }

  public String method1(String a, @NonNull int b) {
    return a;
  }

  public String method2(String a, @NotNull int b) {
    Validate.isTrue(b < 0);
    Preconditions.checkArgument(b > 100, "msg");
    Validate.isTrue(b > 100);
    return a;
  }
}
