package synth.java.p2;

import androidx.annotation.Nullable;
import javax.annotation.Nonnull;
import org.apache.commons.lang3.Validate;

public class Sample32 {
  @Deprecated
  public String method0(String a, @Nullable int b) {
    return a;
  }

  @Deprecated
  public String method1(String a, int b) {
    return a;
  }

  @Nonnull
  public String method2(@Nonnull String a, int b) {
    if (b % 2 != 0) throw new MyAppException();
    Validate.isTrue(b == 7);
    Validate.isTrue(a.isEmpty());
    if (b > 100) throw new RuntimeException();
    return a;
  }

  public String method3(String a, int b) {
    b += 1;
    if (b % 2 != 0) throw new IndexOutOfBoundsException("bad");
    assert b < 0 : "invariant";
    return a;
  }
}
